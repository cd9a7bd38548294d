"""Submodules of free modules and the multigraded ideal/module toolkit.

All inputs are required to be homogeneous for the Z^r grading.  Operations
that the spec of the toolkit names — intersect (homogenised elimination
trick), colon, saturation, B-saturation, truncation, Hilbert functions,
codimension, B-torsion tests — live here.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .groebner import (
    FreeModule,
    GroebnerBasis,
    ModuleElement,
    POS_BITS,
    groebner_basis,
    minimal_generators,
    syzygy_module,
    term_key,
    term_mono,
    term_pos,
)
from .ring import Multidegree, Polynomial, RingSpec, vmax, vsub


class Submodule:
    """A graded submodule of a free module, given by homogeneous generators."""

    __slots__ = ("module", "gens", "_gb")

    def __init__(self, module: FreeModule, gens: Iterable[ModuleElement]):
        self.module = module
        clean = []
        for g in gens:
            if g.module != module:
                raise ValueError("generator lives in a different module")
            if not g.terms:
                continue
            g.multidegree()  # raises with a witness if inhomogeneous
            clean.append(g)
        self.gens = clean
        self._gb: GroebnerBasis | None = None

    @property
    def ring(self) -> RingSpec:
        return self.module.ring

    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner_basis(self.gens, module=self.module)
        return self._gb

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, elt: ModuleElement) -> bool:
        if not elt.terms:
            return True
        return self.gb().contains(elt)

    def contains_all(self, elts: Iterable[ModuleElement]) -> bool:
        return all(self.contains(e) for e in elts)

    def contains_submodule(self, other: "Submodule") -> bool:
        return self.contains_all(other.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Submodule):
            return NotImplemented
        if self.module != other.module:
            return False
        return self.contains_submodule(other) and other.contains_submodule(self)

    def __hash__(self) -> int:  # pragma: no cover - identity hashing only
        return id(self)

    def minimalized(self) -> "Submodule":
        out = Submodule(self.module, minimal_generators(self.gens, module=self.module))
        return out

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens)

    def gen_degrees(self) -> list[Multidegree]:
        return [g.multidegree() for g in self.gens]

    def __repr__(self) -> str:
        return f"Submodule({len(self.gens)} gens of {self.module!r})"


def ideal(ring: RingSpec, polys: Sequence[Polynomial]) -> Submodule:
    """The ideal generated by homogeneous polynomials, as a rank-1 submodule."""
    amb = FreeModule(ring, [(0,) * ring.rank_grading])
    return Submodule(amb, [amb.wrap(f) for f in polys])


def free_rank_one(ring: RingSpec) -> FreeModule:
    return FreeModule(ring, [(0,) * ring.rank_grading])


class QuotientModule:
    """A cokernel presentation F / W with W a submodule of the free module F."""

    __slots__ = ("free", "relations", "_resolution")

    def __init__(self, free: FreeModule, relations: Submodule):
        if relations.module != free:
            raise ValueError("relations do not live in the given free module")
        self.free = free
        self.relations = relations
        self._resolution = None

    @classmethod
    def cyclic(cls, I: Submodule) -> "QuotientModule":
        """S/I for an ideal I."""
        if I.module.rank != 1:
            raise ValueError("cyclic presentation requires a rank-one ambient")
        return cls(I.module, I)

    @property
    def ring(self) -> RingSpec:
        return self.free.ring

    def hilbert_function(self, degree: Multidegree) -> int:
        return hilbert_function(self, degree)

    def graded_basis(self, degree: Multidegree) -> list[tuple[int, int]]:
        """Standard monomial basis [(position, monomial key)] of degree ``degree``."""
        ring = self.ring
        codec = ring.codec
        leads_by_pos: dict[int, list[int]] = {}
        for pos, K in self.relations.gb().lead_terms():
            leads_by_pos.setdefault(pos, []).append(K)
        out: list[tuple[int, int]] = []
        for pos, gdeg in enumerate(self.free.gen_degrees):
            target = vsub(degree, gdeg)
            leads = leads_by_pos.get(pos, ())
            for K in ring.monomials_of_degree(target):
                if not any(codec.divides(L, K) for L in leads):
                    out.append((pos, K))
        return out

    def __repr__(self) -> str:
        return f"QuotientModule(rank {self.free.rank}, {len(self.relations.gens)} relations)"


# ---------------------------------------------------------------------------
# monomial fast paths


def _monomial_minimalize(module: FreeModule, terms: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Minimal elements of a set of (pos, key) monomial generators."""
    codec = module.ring.codec
    terms = sorted(set(terms), key=lambda pk: (pk[0], pk[1]))
    out: list[tuple[int, int]] = []
    for pos, K in terms:
        if not any(p == pos and codec.divides(L, K) for p, L in out):
            out = [(p, L) for p, L in out if not (p == pos and codec.divides(K, L))]
            out.append((pos, K))
    return out


def _monomial_gens(A: Submodule) -> list[tuple[int, int]]:
    out = []
    for g in A.gens:
        ((t, _),) = g.terms.items()
        out.append((term_pos(t), term_mono(t)))
    return out


def _from_monomials(module: FreeModule, terms: list[tuple[int, int]]) -> Submodule:
    gens = [
        ModuleElement(module, {term_key(K, pos): 1})
        for pos, K in _monomial_minimalize(module, terms)
    ]
    return Submodule(module, gens)


# ---------------------------------------------------------------------------
# intersect via the homogenised elimination trick


def _lift_to_elim(
    src: FreeModule, dst: FreeModule, elt: ModuleElement, ext: RingSpec
) -> ModuleElement:
    terms = {}
    for t, c in elt.terms.items():
        exps = src.ring.codec.decode(term_mono(t)) + (0,)
        terms[term_key(ext.codec.encode(exps), term_pos(t))] = c
    return ModuleElement(dst, terms)


def _drop_elim(dst: FreeModule, elt: ModuleElement, ext: RingSpec) -> ModuleElement:
    terms = {}
    ring = dst.ring
    for t, c in elt.terms.items():
        exps = ext.codec.decode(term_mono(t))
        if exps[-1] != 0:
            raise ValueError("element still involves the elimination variable")
        terms[term_key(ring.codec.encode(exps[:-1]), term_pos(t))] = c
    return ModuleElement(dst, terms)


def intersect(A: Submodule, B: Submodule) -> Submodule:
    """A ∩ B via a degree-zero homogenising variable and elimination order."""
    if A.module != B.module:
        raise ValueError("intersection requires a common ambient module")
    if A.is_zero() or B.is_zero():
        return Submodule(A.module, [])
    if A.is_monomial() and B.is_monomial():
        codec = A.ring.codec
        terms = []
        for pa, Ka in _monomial_gens(A):
            for pb, Kb in _monomial_gens(B):
                if pa == pb:
                    terms.append((pa, codec.lcm(Ka, Kb)))
        return _from_monomials(A.module, terms)
    ring = A.ring
    ext = ring.with_elim_variable()
    extmod = FreeModule(ext, A.module.gen_degrees)
    t_poly = ext.variable(ext.nvars - 1)
    one_minus_t = ext.one() - t_poly
    gens = []
    for a in A.gens:
        gens.append(_lift_to_elim(A.module, extmod, a, ext).poly_mul(t_poly))
    for b in B.gens:
        gens.append(_lift_to_elim(A.module, extmod, b, ext).poly_mul(one_minus_t))
    gb = groebner_basis(gens, module=extmod)
    elim_shift = ext.codec.elim_shift + POS_BITS
    kept = []
    for e in gb:
        T, _ = e.lead_term()
        if T >> elim_shift:
            continue  # lead involves t, hence (elimination order) so does e
        kept.append(_drop_elim(A.module, e, ext))
    return Submodule(A.module, minimal_generators(kept, module=A.module))


# ---------------------------------------------------------------------------
# colon and saturation


def quotient(A: Submodule, f: Polynomial) -> Submodule:
    """The colon module (A : f)."""
    if not f.terms:
        raise ValueError("colon by zero")
    f.multidegree()
    if A.is_zero():
        return A
    F = A.module
    ring = A.ring
    if A.is_monomial() and len(f.terms) == 1:
        (kf,) = f.terms
        codec = ring.codec
        terms = []
        for pos, K in _monomial_gens(A):
            e1 = codec.decode(K)
            e2 = codec.decode(kf)
            g = codec.encode(tuple(min(a, b) for a, b in zip(e1, e2)))
            terms.append((pos, codec.quot(K, g)))
        return _from_monomials(F, terms)
    m = len(A.gens)
    gens = list(A.gens)
    for j in range(F.rank):
        gens.append(F.basis_element(j).poly_mul(f))
    syz = syzygy_module(gens, minimalize=False)
    out = []
    for s in syz:
        terms = {}
        for t, c in s.terms.items():
            pos = term_pos(t)
            if pos >= m:
                terms[term_key(term_mono(t), pos - m)] = c
        if terms:
            out.append(ModuleElement(F, terms))
    return Submodule(F, minimal_generators(out, module=F))


def saturate(A: Submodule, f: Polynomial) -> Submodule:
    """The saturation (A : f^infinity)."""
    if not f.terms:
        raise ValueError("saturation by zero")
    if A.is_zero():
        return A
    if A.is_monomial() and len(f.terms) == 1:
        (kf,) = f.terms
        ring = A.ring
        codec = ring.codec
        support = [j for j, e in enumerate(codec.decode(kf)) if e]
        terms = []
        for pos, K in _monomial_gens(A):
            exps = list(codec.decode(K))
            for j in support:
                exps[j] = 0
            terms.append((pos, codec.encode(exps)))
        return _from_monomials(A.module, terms)
    current = A
    while True:
        nxt = quotient(current, f)
        if current.contains_submodule(nxt):
            return current
        current = nxt


def saturate_by_ideal(A: Submodule, J: Submodule | Sequence[Polynomial]) -> Submodule:
    """The saturation (A : J^infinity) = ∩_f (A : f^infinity) over gens f of J."""
    if isinstance(J, Submodule):
        if J.module.rank != 1:
            raise ValueError("saturating ideal must have rank-one ambient")
        polys = [g.coordinate(0) for g in J.gens]
    else:
        polys = list(J)
    if not polys:
        raise ValueError("saturating ideal has no generators")
    parts = [saturate(A, f) for f in polys]
    unchanged = [P for P in parts if A.contains_submodule(P)]
    if len(unchanged) == len(parts):
        return A
    result = parts[0]
    for P in parts[1:]:
        if result.contains_submodule(P) and P.contains_submodule(result):
            continue
        result = intersect(result, P)
    return result


def b_saturate(A: Submodule) -> Submodule:
    """Saturation with respect to the irrelevant ideal B = ∩_i P_i."""
    current = A
    for prime in A.ring.irrelevant_primes:
        vars_ = [current.ring.variable(j) for j in prime]
        current = saturate_by_ideal(current, vars_)
    return current


def irrelevant_power(ring: RingSpec, a: Sequence[int]) -> Submodule:
    """The ideal B^[a] = ∩_i P_i^{a_i} (monomial, minimally generated)."""
    a = tuple(a)
    if len(a) != len(ring.irrelevant_primes):
        raise ValueError("exponent vector length must match the number of irrelevant primes")
    if any(c < 0 for c in a):
        raise ValueError("exponents must be nonnegative")
    codec = ring.codec
    blocks: list[list[int]] = []
    for prime, ai in zip(ring.irrelevant_primes, a):
        if ai == 0:
            continue
        keys = []
        for combo in _exponent_combos(len(prime), ai):
            exps = [0] * ring.nvars
            for v, e in zip(prime, combo):
                exps[v] = e
            keys.append(codec.encode(exps))
        blocks.append(keys)
    amb = free_rank_one(ring)
    if not blocks:
        return Submodule(amb, [amb.wrap(ring.one())])
    prod = blocks[0]
    for blk in blocks[1:]:
        prod = [codec.mul(k1, k2) for k1 in prod for k2 in blk]
    return _from_monomials(amb, [(0, k) for k in prod])


def _exponent_combos(nvars: int, total: int):
    if nvars == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _exponent_combos(nvars - 1, total - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# truncation, Hilbert functions, codimension


def truncate(A: Submodule, a: Sequence[int]) -> Submodule:
    """The degree-wise truncation A_{>= a}, product rings only."""
    ring = A.ring
    if not ring.is_product:
        raise NotImplementedError("truncation is implemented for products of projective spaces")
    a = tuple(a)
    out: list[ModuleElement] = []
    zero = (0,) * ring.rank_grading
    for g in A.gens:
        need = vmax(vsub(a, g.multidegree()), zero)
        for key in ring.monomials_of_degree(need):
            out.append(g.mono_mul(key))
    return Submodule(A.module, minimal_generators(out, module=A.module))


def hilbert_function(M: QuotientModule | Submodule, degree: Sequence[int]) -> int:
    """dim_k M_degree for a quotient presentation (or a submodule)."""
    degree = tuple(degree)
    if isinstance(M, Submodule):
        free = QuotientModule(M.module, Submodule(M.module, []))
        total = hilbert_function(free, degree)
        return total - hilbert_function(QuotientModule(M.module, M), degree)
    ring = M.ring
    codec = ring.codec
    leads_by_pos: dict[int, list[int]] = {}
    for pos, K in M.relations.gb().lead_terms():
        leads_by_pos.setdefault(pos, []).append(K)
    count = 0
    for pos, gdeg in enumerate(M.free.gen_degrees):
        target = vsub(degree, gdeg)
        leads = leads_by_pos.get(pos, ())
        if not leads:
            count += ring.hilbert_series_free(target)
            continue
        for K in ring.monomials_of_degree(target):
            if not any(codec.divides(L, K) for L in leads):
                count += 1
    return count


def codim(I: Submodule) -> int:
    """Codimension of V(I) inside the ambient affine space Spec S."""
    if I.module.rank != 1:
        raise ValueError("codim is defined for ideals")
    if I.is_zero():
        return 0
    ring = I.ring
    supports = []
    for _, K in I.gb().lead_terms():
        exps = ring.codec.decode(K)
        supports.append(frozenset(j for j, e in enumerate(exps) if e))
    if frozenset() in supports:
        return ring.nvars  # unit ideal
    nvars = ring.nvars
    best = 0
    allvars = list(range(nvars))
    import itertools as _it

    for size in range(nvars, 0, -1):
        if size <= best:
            break
        for U in _it.combinations(allvars, size):
            Uset = frozenset(U)
            if not any(s <= Uset for s in supports):
                best = size
                break
        if best:
            break
    return nvars - best


# ---------------------------------------------------------------------------
# subquotients and B-torsion


class Subquotient:
    """U / W for nested submodules W ⊆ U of a common free module."""

    __slots__ = ("upper", "lower")

    def __init__(self, upper: Submodule, lower: Submodule, verify: bool = True):
        if upper.module != lower.module:
            raise ValueError("subquotient pieces must share an ambient module")
        if verify and not upper.contains_submodule(lower):
            raise ValueError("lower piece is not contained in the upper piece")
        self.upper = upper
        self.lower = lower

    def is_zero(self) -> bool:
        return self.lower.contains_submodule(self.upper)

    def __repr__(self) -> str:
        return f"Subquotient({len(self.upper.gens)} upper gens / {len(self.lower.gens)} lower gens)"


def is_b_torsion(M: Subquotient) -> bool:
    """True when every element of U/W is annihilated by a power of B."""
    if M.is_zero():
        return True
    return b_saturate(M.lower).contains_submodule(M.upper)
