"""Cohomology of line bundles on products of projective spaces.

Exact Künneth cohomology of O(a), Euler characteristics of twisted modules,
bounded local-cohomology and regularity checks, Delta_i twist sets with the
linear-truncation test, and Beilinson-style virtual-resolution shapes.

All module-level computations require a product ring; custom toric gradings
are rejected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .complexes import FreeComplex, free_resolution
from .groebner import FreeModule, term_mono, term_pos
from .ideals import (
    QuotientModule,
    Submodule,
    free_rank_one,
    irrelevant_power,
)
from .ring import Multidegree, Polynomial, RingSpec, vadd, vsub


# ---------------------------------------------------------------------------
# line bundles


def binom_poly(m: int, k: int) -> int:
    """Binomial coefficient in the polynomial convention.

    ``m (m-1) ... (m-k+1) / k!`` for any integer ``m`` and ``k >= 0``, so the
    result is a genuine polynomial in ``m`` (negative for some negative m).
    """
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= m - j
    val = Fraction(num, 1)
    for j in range(2, k + 1):
        val /= j
    assert val.denominator == 1
    return int(val)


def _dims(n) -> tuple[int, ...]:
    if isinstance(n, RingSpec):
        if not n.is_product:
            raise ValueError("cohomology requires a product of projective spaces")
        return tuple(n.dimension_vector)
    return tuple(int(c) for c in n)


@dataclass
class CohomologyProfile:
    """Cohomology dimensions h^q of a line bundle, as a map q -> dim."""

    dims: dict[int, int] = field(default_factory=dict)

    def h(self, q: int) -> int:
        return self.dims.get(q, 0)

    def is_zero(self) -> bool:
        return not self.dims

    def euler(self) -> int:
        return sum((-1) ** q * d for q, d in self.dims.items())


def line_bundle_cohomology(n, a: Sequence[int]) -> CohomologyProfile:
    """Künneth cohomology of O(a) on the product of projective spaces P^n.

    Each factor contributes in degree 0 (a_i >= 0) or in its top degree n_i
    (a_i <= -n_i - 1); a factor with a_i strictly between kills everything.
    """
    n = _dims(n)
    a = tuple(a)
    if len(a) != len(n):
        raise ValueError("twist length must match the number of factors")
    q = 0
    dim = 1
    for ni, ai in zip(n, a):
        if ai >= 0:
            dim *= binom_poly(ai + ni, ni)
        elif ai <= -ni - 1:
            q += ni
            dim *= binom_poly(-ai - 1, ni)
        else:
            return CohomologyProfile({})
    if dim == 0:
        return CohomologyProfile({})
    return CohomologyProfile({q: dim})


def euler_char_line(n, a: Sequence[int]) -> int:
    """chi(O(a)) = prod_i binom(a_i + n_i, n_i) in the polynomial convention."""
    n = _dims(n)
    a = tuple(a)
    if len(a) != len(n):
        raise ValueError("twist length must match the number of factors")
    out = 1
    for ni, ai in zip(n, a):
        out *= binom_poly(ai + ni, ni)
    return out


def sheaf_euler_char(M: QuotientModule | Submodule | FreeComplex, b: Sequence[int]) -> int:
    """chi of the sheafification of M twisted by b, by additivity over a
    free resolution."""
    if isinstance(M, FreeComplex):
        F = M
    else:
        F = free_resolution(M)
    ring = F.ring
    n = _dims(ring)
    b = tuple(b)
    total = 0
    for i, term in enumerate(F.terms):
        sign = (-1) ** i
        for a in term.gen_degrees:
            total += sign * euler_char_line(n, vsub(b, a))
    return total


# ---------------------------------------------------------------------------
# local cohomology via the Ext colimit


_POWER_RES_CACHE: dict[tuple, FreeComplex] = {}


def _irrelevant_power_resolution(ring: RingSpec, t: int) -> FreeComplex:
    key = (tuple(ring.dimension_vector), ring.char, t)
    F = _POWER_RES_CACHE.get(key)
    if F is None:
        B = irrelevant_power(ring, (t,) * len(ring.dimension_vector))
        F = free_resolution(QuotientModule.cyclic(B))
        _POWER_RES_CACHE[key] = F
    return F


def _rank_mod_p(A: np.ndarray, p: int) -> int:
    A = A.copy() % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        pivot = None
        for rr in range(r, rows):
            if A[rr, c]:
                pivot = rr
                break
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        for rr in range(rows):
            if rr != r and A[rr, c]:
                A[rr] = (A[rr] - A[rr, c] * A[r]) % p
        r += 1
        if r == rows:
            break
    return r


def _graded_piece(M: QuotientModule, degree: Multidegree):
    """Basis and index of the standard-monomial basis of M in one degree."""
    basis = M.graded_basis(degree)
    index = {bk: i for i, bk in enumerate(basis)}
    return basis, index


def _hom_matrix(
    M: QuotientModule,
    F: FreeComplex,
    k: int,
    b: Multidegree,
    pieces: dict,
) -> np.ndarray:
    """Matrix of Hom(F_k, M)_b -> Hom(F_{k+1}, M)_b (precomposition with d)."""
    ring = M.ring
    p = ring.char
    gb = M.relations.gb()

    def piece(degree):
        if degree not in pieces:
            pieces[degree] = _graded_piece(M, degree)
        return pieces[degree]

    src_degs = F.terms[k].gen_degrees
    dst_degs = F.terms[k + 1].gen_degrees
    src_blocks = [piece(vadd(b, a)) for a in src_degs]
    dst_blocks = [piece(vadd(b, c)) for c in dst_degs]
    src_dim = sum(len(bas) for bas, _ in src_blocks)
    dst_dim = sum(len(bas) for bas, _ in dst_blocks)
    A = np.zeros((dst_dim, src_dim), dtype=np.int64)
    if src_dim == 0 or dst_dim == 0:
        return A
    src_off = np.cumsum([0] + [len(bas) for bas, _ in src_blocks])
    dst_off = np.cumsum([0] + [len(bas) for bas, _ in dst_blocks])
    cols = F.maps[k]
    for kk, col in enumerate(cols):
        dst_bas, dst_idx = dst_blocks[kk]
        if not dst_bas:
            continue
        # column kk of d_{k+1} has entries p_{j,kk} in coordinate j
        entries: dict[int, Polynomial] = {}
        for t, c in col.terms.items():
            entries.setdefault(term_pos(t), []).append((term_mono(t), c))
        for j, mono_terms in entries.items():
            src_bas, _ = src_blocks[j]
            for col_i, (pos, K) in enumerate(src_bas):
                # multiply the basis monomial by the polynomial entry
                elt = M.free.zero()
                terms_: dict[int, int] = {}
                for K2, c2 in mono_terms:
                    K3 = ring.codec.mul(K, K2)
                    tk = _tkey(K3, pos)
                    terms_[tk] = (terms_.get(tk, 0) + c2) % p
                elt = _elt(M.free, terms_)
                nf = gb.normal_form(elt)
                for t2, c3 in nf.terms.items():
                    row = dst_idx[(term_pos(t2), term_mono(t2))]
                    A[dst_off[kk] + row, src_off[j] + col_i] = (
                        A[dst_off[kk] + row, src_off[j] + col_i] + c3
                    ) % p
    return A


def _tkey(K: int, pos: int) -> int:
    from .groebner import term_key

    return term_key(K, pos)


def _elt(module: FreeModule, terms: dict[int, int]):
    from .groebner import ModuleElement

    return ModuleElement(module, {t: c for t, c in terms.items() if c})


def _ext_dim(M: QuotientModule, i: int, b: Multidegree, t: int) -> int:
    """dim Ext^i(S/B^[t], M)_b over F_p."""
    ring = M.ring
    F = _irrelevant_power_resolution(ring, t)
    if i > F.length:
        return 0
    pieces: dict = {}
    dim_i = sum(
        len(M.graded_basis(vadd(b, a))) for a in F.terms[i].gen_degrees
    )
    if dim_i == 0:
        return 0
    rank_out = 0
    if i < F.length:
        rank_out = _rank_mod_p(_hom_matrix(M, F, i, b, pieces), ring.char)
    rank_in = 0
    if i >= 1:
        rank_in = _rank_mod_p(_hom_matrix(M, F, i - 1, b, pieces), ring.char)
    return dim_i - rank_out - rank_in


def local_cohomology_dim(
    M: QuotientModule | Submodule,
    i: int,
    b: Sequence[int],
    t_max: int = 6,
) -> tuple[int, bool]:
    """dim H^i_B(M)_b via the colimit of Ext^i(S/B^[t], M)_b over t.

    Returns (dimension, stabilized).  Stabilization is declared when two
    consecutive values of t agree; if t_max is reached first the last value
    is returned with the flag false.
    """
    if isinstance(M, Submodule):
        M = QuotientModule.cyclic(M) if M.module.rank == 1 else None
        if M is None:
            raise ValueError("expected an ideal or a presented quotient module")
    ring = M.ring
    if not ring.is_product:
        raise ValueError("local cohomology requires a product of projective spaces")
    b = tuple(b)
    prev = None
    for t in range(1, t_max + 1):
        val = _ext_dim(M, i, b, t)
        if prev is not None and val == prev:
            return val, True
        prev = val
    return prev, False


# ---------------------------------------------------------------------------
# regularity checks


@dataclass
class RegularityReport:
    candidate: Multidegree
    window: tuple[Multidegree, Multidegree]
    checks: list  # failure witnesses (i, p, dim)
    verdict: str  # "consistent-in-window" | "refuted"
    unstabilized: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "candidate": list(self.candidate),
            "window": [list(self.window[0]), list(self.window[1])],
            "failures": [
                {"i": i, "p": list(p), "dim": d} for (i, p, d) in self.checks
            ],
            "unstabilized": [
                {"i": i, "p": list(p)} for (i, p) in self.unstabilized
            ],
            "verdict": self.verdict,
        }


def _box(lo: Multidegree, hi: Multidegree):
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return itertools.product(*ranges)


def _pattern(n: tuple[int, ...], c: Multidegree) -> tuple[int, ...] | None:
    """Per-factor cohomological degrees (q_1, ..., q_r) of O(c), or None."""
    out = []
    for ni, ci in zip(n, c):
        if ci >= 0:
            out.append(0)
        elif ci <= -ni - 1:
            out.append(ni)
        else:
            return None
    return tuple(out)


def _factor_exponents(ni: int, qi: int, ci: int) -> list[tuple[int, ...]]:
    """Monomial basis of H^{q_i}(P^{n_i}, O(c_i)) as exponent tuples.

    Degree 0: ordinary monomials (exponents >= 0).  Top degree n_i: Laurent
    monomials with every exponent <= -1 (the Cech local-cohomology basis).
    """
    if qi == 0:
        return [e for e in _weak_comp(ci, ni + 1)]
    total = -ci - (ni + 1)
    return [tuple(-1 - f for f in e) for e in _weak_comp(total, ni + 1)]


def _weak_comp(total: int, parts: int) -> list[tuple[int, ...]]:
    if total < 0:
        return []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _weak_comp(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def _hq_basis(n: tuple[int, ...], c: Multidegree) -> tuple[int, list[tuple[int, ...]]] | None:
    """(q, basis) for the single nonzero cohomology of O(c), or None."""
    pat = _pattern(n, c)
    if pat is None:
        return None
    factors = [
        _factor_exponents(ni, qi, ci) for ni, qi, ci in zip(n, pat, c)
    ]
    if any(not f for f in factors):
        return None
    basis = [sum(combo, ()) for combo in itertools.product(*factors)]
    return sum(pat), basis


def sheaf_cohomology_exact(
    F: FreeComplex, p: Multidegree
) -> dict[int, int | None]:
    """Exact dims of H^k(X, M~(p)) from a free complex sheafifying to M~.

    Computes the hypercohomology spectral sequence of the twisted complex
    with explicit monomial/Laurent-monomial bases of H^q(O(c)) and the
    induced multiplication maps, takes E_2, and reads off each diagonal
    whose higher differentials are forced to vanish.  Undetermined diagonals
    map to None.
    """
    ring = F.ring
    n = _dims(ring)
    char = ring.char
    # E1 page: per (j, q), list of (summand index, basis, index map)
    summand_data: list[list] = []  # [j][a] = (q, basis, index) or None
    for term in F.terms:
        row = []
        for a in term.gen_degrees:
            qb = _hq_basis(n, vsub(p, a))
            if qb is None:
                row.append(None)
            else:
                q, basis = qb
                row.append((q, basis, {e: k for k, e in enumerate(basis)}))
        summand_data.append(row)
    qs = sorted({d[0] for row in summand_data for d in row if d})
    e2: dict[tuple[int, int], int] = {}
    for q in qs:
        dims = []
        for j in range(len(F.terms)):
            dims.append(
                sum(len(d[1]) for d in summand_data[j] if d and d[0] == q)
            )
        ranks = [0] * (len(F.terms) + 1)
        for j in range(1, len(F.terms)):
            if dims[j] == 0 or dims[j - 1] == 0:
                continue
            src = [
                (ai, d) for ai, d in enumerate(summand_data[j]) if d and d[0] == q
            ]
            dst = [
                (ai, d) for ai, d in enumerate(summand_data[j - 1]) if d and d[0] == q
            ]
            src_off = {}
            off = 0
            for ai, d in src:
                src_off[ai] = off
                off += len(d[1])
            dst_off = {}
            off = 0
            for ai, d in dst:
                dst_off[ai] = off
                off += len(d[1])
            A = np.zeros((dims[j - 1], dims[j]), dtype=np.int64)
            cols = F.maps[j - 1]
            for ai, d in src:
                col = cols[ai]
                qsrc, basis, _ = d
                for t, coeff in col.terms.items():
                    ti = term_pos(t)
                    ddst = summand_data[j - 1][ti]
                    if ddst is None or ddst[0] != q:
                        continue
                    mono = ring.codec.decode(term_mono(t))
                    _, _, dst_index = ddst
                    for bi, exps in enumerate(basis):
                        # images leaving the Cech basis region (a top-degree
                        # exponent reaching >= 0) are zero and simply miss
                        # the target index
                        new = tuple(e + m for e, m in zip(exps, mono))
                        tgt = dst_index.get(new)
                        if tgt is None:
                            continue
                        A[dst_off[ti] + tgt, src_off[ai] + bi] = (
                            A[dst_off[ti] + tgt, src_off[ai] + bi] + coeff
                        ) % char
            ranks[j] = _rank_mod_p(A, char)
        for j in range(len(F.terms)):
            val = dims[j] - ranks[j] - ranks[j + 1]
            if val:
                e2[(j, q)] = val
    out: dict[int, int | None] = {}
    maxq = sum(n)
    for k in range(0, maxq + 1):
        total = 0
        determined = True
        for j in range(len(F.terms)):
            q = k + j
            if q > maxq:
                break
            val = e2.get((j, q), 0)
            if not val:
                continue
            # higher differentials: d_r hits (j - r, q - r + 1) and is fed
            # from (j + r, q + r - 1), r >= 2
            for r in range(2, len(F.terms) + 1):
                if e2.get((j + r, q + r - 1), 0):
                    determined = False
                if j - r >= 0 and e2.get((j - r, q - r + 1), 0):
                    determined = False
            total += val
        out[k] = total if determined else None
    return out


def local_cohomology_dim_fast(
    M: QuotientModule,
    F: FreeComplex,
    i: int,
    p: Multidegree,
    t_max: int = 6,
    coh: dict[int, int | None] | None = None,
) -> tuple[int, bool, bool]:
    """dim H^i_B(M)_p, exactly when the spectral sequence determines it.

    Returns (dim, exact, stabilized).  For i >= 2 the value equals
    h^{i-1}(X, M~(p)); for i = 1 and B-saturated M it equals
    h^0(M~(p)) - HF(M, p).  Both are evaluated exactly from the
    hypercohomology of the resolution when the relevant diagonal is
    determined; otherwise the Ext colimit heuristic is used.
    """
    if coh is None:
        coh = sheaf_cohomology_exact(F, p)
    if i >= 2:
        val = coh.get(i - 1, 0)
        if val is not None:
            return val, True, True
    elif i == 1:
        h0 = coh.get(0, None)
        if h0 is not None:
            dim = h0 - M.hilbert_function(p)
            if dim >= 0:
                return dim, True, True
    elif i == 0:
        # H^0_B is the B-torsion; for the saturated modules handled here it
        # vanishes, but fall through to the honest computation.
        pass
    val, stab = local_cohomology_dim(M, i, p, t_max=t_max)
    return val, False, stab


def regularity_check(
    M: QuotientModule | Submodule,
    d: Sequence[int],
    window: tuple[Sequence[int], Sequence[int]] | None = None,
    t_max: int = 6,
    strict: bool = False,
) -> RegularityReport:
    """Test whether d is a regularity candidate for M, inside a window.

    By default checks H^i_B(M)_p = 0 for all i >= 1 and all p in
    (d + N^r) intersected with the window.  With ``strict`` the regions are
    enlarged to the union of (d - q + N^r) over q in N^r with |q| = i - 1,
    the shifted-region form of multigraded regularity; the strict regions
    are genuinely more demanding (for instance they probe twists below d in
    one factor), and several classical examples satisfy only the default
    condition.  A nonzero witness refutes d for the chosen regions exactly;
    an empty failure list means "consistent-in-window" only.
    """
    if isinstance(M, Submodule):
        M = QuotientModule.cyclic(M)
    ring = M.ring
    if not ring.is_product:
        raise ValueError("regularity checks require a product of projective spaces")
    n = _dims(ring)
    r = len(n)
    d = tuple(d)
    if window is None:
        lo = tuple(-ni - 1 for ni in n)
        maxgen = [0] * r
        for g in M.relations.gens:
            maxgen = [max(a, b) for a, b in zip(maxgen, g.multidegree())]
        hi = tuple(
            max(di + ni + 1, mg) for di, ni, mg in zip(d, n, maxgen)
        )
    else:
        lo = tuple(int(c) for c in window[0])
        hi = tuple(int(c) for c in window[1])
    if any(a > b for a, b in zip(lo, hi)):
        raise ValueError("empty window")
    F = free_resolution(M)
    failures = []
    unstabilized = []
    needed: dict[Multidegree, list[int]] = {}
    for i in range(1, sum(n) + 2):
        shifts = (
            [q for q in itertools.product(range(i), repeat=r) if sum(q) == i - 1]
            if strict
            else [(0,) * r]
        )
        for q in shifts:
            base = vsub(d, q)
            plo = tuple(max(a, b) for a, b in zip(base, lo))
            if any(a > b for a, b in zip(plo, hi)):
                continue
            for p in _box(plo, hi):
                lst = needed.setdefault(p, [])
                if i not in lst:
                    lst.append(i)
    for p in sorted(needed):
        coh = sheaf_cohomology_exact(F, p)
        for i in needed[p]:
            dim, exact, stab = local_cohomology_dim_fast(
                M, F, i, p, t_max=t_max, coh=coh
            )
            if not exact and not stab:
                unstabilized.append((i, p))
            if dim:
                failures.append((i, p, dim))
    verdict = "refuted" if failures else "consistent-in-window"
    return RegularityReport((tuple(d)), (lo, hi), failures, verdict, unstabilized)


# ---------------------------------------------------------------------------
# Delta sets and linear truncations


def _delta_twists(n: tuple[int, ...], i: int) -> set[Multidegree]:
    if i == 0:
        return {(0,) * len(n)}
    r = len(n)
    target = r + i - 1
    out = set()
    for a in itertools.product(*[range(1, ni + 2) for ni in n]):
        if sum(a) == target:
            out.add(tuple(-c for c in a))
    return out


def delta_set(ring_or_n, i: int) -> set[Multidegree]:
    """Twist set of the i-th step of the minimal free resolution of S/B."""
    n = _dims(ring_or_n)
    if i < 0 or i > sum(n):
        raise ValueError("index out of range for delta_set")
    return _delta_twists(n, i)


def check_linear_truncation(F: FreeComplex, d: Sequence[int]) -> bool:
    """True iff every generator degree c of F_i satisfies c in d + Delta_i + N^r.

    An untwisted unit summand S(0) in F_0 is exempt, so the test applies
    both to resolutions of truncated modules (F_0 generated in degree d)
    and to pair complexes starting at S itself.
    """
    ring = F.ring
    n = _dims(ring)
    d = tuple(d)
    zero = (0,) * len(d)
    for i, term in enumerate(F.terms):
        deltas = _delta_twists(n, i)
        for c in term.gen_degrees:
            if i == 0 and c == zero:
                continue
            shifted = vsub(c, d)
            if not any(
                all(s - dd >= 0 for s, dd in zip(shifted, delta))
                for delta in deltas
            ):
                return False
    return True


# ---------------------------------------------------------------------------
# Beilinson shapes


@lru_cache(maxsize=None)
def _chi_omega(n: int, u: int, t: int) -> int:
    """chi(Omega^u(t)) on P^n via the truncated Koszul / Euler recursion."""
    if u < 0 or u > n:
        return 0
    if u == 0:
        return binom_poly(t + n, n)
    return binom_poly(n + 1, u) * binom_poly(t - u + n, n) - _chi_omega(n, u - 1, t)


@dataclass
class BeilinsonShape:
    """Ranks of the S(-d-u) blocks of the Beilinson-style virtual resolution."""

    degree: Multidegree
    blocks: dict[int, dict[Multidegree, int]]
    vanishing_verified: bool | None = None

    def totals(self) -> list[int]:
        top = max(self.blocks) if self.blocks else 0
        return [
            sum(self.blocks.get(i, {}).values()) for i in range(top + 1)
        ]

    def to_json_dict(self) -> dict:
        return {
            "degree": list(self.degree),
            "blocks": [
                {"i": i, "twist": list(c), "rank": rk}
                for i in sorted(self.blocks)
                for c, rk in sorted(self.blocks[i].items())
            ],
            "vanishing_verified": self.vanishing_verified,
        }


def beilinson_shape(
    M: QuotientModule | Submodule,
    d: Sequence[int],
    verify_vanishing: bool = False,
) -> BeilinsonShape:
    """Shape (twists and ranks) of the Beilinson-style virtual resolution.

    The block indexed by u (0 <= u <= n componentwise) sits in homological
    index |u| with generator degree d + u and rank chi(M~ tensor Omega^u(u+d)),
    computed by additivity over a free resolution of M and the per-factor
    Koszul recursion for chi(Omega^u(t)).
    """
    if isinstance(M, Submodule):
        M = QuotientModule.cyclic(M)
    ring = M.ring
    n = _dims(ring)
    d = tuple(d)
    F = free_resolution(M)
    blocks: dict[int, dict[Multidegree, int]] = {}
    for u in itertools.product(*[range(ni + 1) for ni in n]):
        rank = 0
        for j, term in enumerate(F.terms):
            sign = (-1) ** j
            for a in term.gen_degrees:
                prod = 1
                for ni, ui, di, ai in zip(n, u, d, a):
                    prod *= _chi_omega(ni, ui, ui + di - ai)
                    if prod == 0:
                        break
                rank += sign * prod
        if rank < 0:
            raise ValueError(
                f"vanishing assumption violated: block u={u} has negative "
                f"Euler characteristic {rank}; d={d} is not positive enough"
            )
        if rank:
            blocks.setdefault(sum(u), {})[vadd(d, u)] = rank
    verified = None
    if verify_vanishing:
        verified = True
        for q in range(2, sum(n) + 2):
            dim, _, _ = local_cohomology_dim_fast(M, F, q, d)
            if dim:
                verified = False
                break
    return BeilinsonShape(d, blocks, verified)
