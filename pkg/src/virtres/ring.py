"""Multigraded polynomial rings over finite prime fields.

A ring here is the coordinate ring of a smooth projective toric variety,
graded by the Picard group Z^r.  Two flavours are supported:

* products of projective spaces ``P^{n_1} x ... x P^{n_r}``, with variables
  ``x(i, j)`` (block ``i`` in ``1..r``, index ``j`` in ``0..n_i``) of degree
  ``e_i``; and
* custom toric rings given by an explicit list of variable multidegrees and
  an explicit list of irrelevant primes (variable index sets).

Monomials are packed into single Python ints so that integer comparison of
packed keys realises a weighted-grevlex term order, divisibility is one
masked subtraction and multiplication is one addition.  Layout, low to high:

    [comp_0 | comp_1 | ... | comp_{n-1} | wdeg (| elim exponent)]

where ``comp_j = EXP_MAX - e_j`` occupies 16 bits (complement form makes
"smaller exponent on the last variable wins ties" come out of plain int
comparison, i.e. grevlex) and ``wdeg`` is the weighted total degree.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

Multidegree = tuple[int, ...]

FIELD_BITS = 16
EXP_MAX = (1 << (FIELD_BITS - 1)) - 1  # 32767; exponents must stay below this
WDEG_BITS = 24  # elimination layout reserves this many bits for wdeg


# ---------------------------------------------------------------------------
# multidegree helpers


def vadd(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Multidegree) -> Multidegree:
    return tuple(-x for x in a)


def vmax(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(max(x, y) for x, y in zip(a, b))


def vleq(a: Multidegree, b: Multidegree) -> bool:
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def vscale(c: int, a: Multidegree) -> Multidegree:
    return tuple(c * x for x in a)


# ---------------------------------------------------------------------------
# packed monomial codec


class MonomialCodec:
    """Packs exponent vectors into order-respecting integer keys."""

    __slots__ = (
        "nvars", "weights", "comp_bits", "wshift", "elim_index",
        "elim_shift", "wmask", "C0", "GUARD", "CMASK", "one",
    )

    def __init__(self, weights: Sequence[int], elim_index: int | None = None):
        self.nvars = len(weights)
        self.weights = tuple(weights)
        if any(w <= 0 for w in self.weights):
            raise ValueError("order weights must be strictly positive")
        self.comp_bits = FIELD_BITS * self.nvars
        self.wshift = self.comp_bits
        self.elim_index = elim_index
        if elim_index is not None:
            self.elim_shift = self.wshift + WDEG_BITS
            self.wmask = (1 << WDEG_BITS) - 1
        else:
            self.elim_shift = 0
            self.wmask = -1
        c0 = 0
        guard = 0
        for j in range(self.nvars):
            c0 |= EXP_MAX << (FIELD_BITS * j)
            guard |= (1 << (FIELD_BITS - 1)) << (FIELD_BITS * j)
        self.C0 = c0
        self.GUARD = guard
        self.CMASK = (1 << self.comp_bits) - 1
        self.one = self.encode((0,) * self.nvars)

    def encode(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("wrong number of exponents")
        comp = 0
        wdeg = 0
        for j, (e, w) in enumerate(zip(exps, self.weights)):
            if e < 0 or e > EXP_MAX:
                raise ValueError(f"exponent {e} out of range")
            comp |= (EXP_MAX - e) << (FIELD_BITS * j)
            wdeg += w * e
        key = (wdeg << self.wshift) | comp
        if self.elim_index is not None:
            if wdeg >= (1 << WDEG_BITS):
                raise ValueError("weighted degree too large for elimination layout")
            key |= exps[self.elim_index] << self.elim_shift
            # the elimination variable's field also lives in comp so that
            # divisibility and quotients need no special casing
        return key

    def decode(self, key: int) -> tuple[int, ...]:
        comp = key & self.CMASK
        return tuple(
            EXP_MAX - ((comp >> (FIELD_BITS * j)) & ((1 << FIELD_BITS) - 1))
            for j in range(self.nvars)
        )

    def wdeg(self, key: int) -> int:
        return (key >> self.wshift) & self.wmask

    def mul(self, k1: int, k2: int) -> int:
        """Product of two monomial keys (caller guards against overflow)."""
        return k1 + k2 - self.C0

    def divides(self, kd: int, km: int) -> bool:
        """True when the monomial of kd divides that of km."""
        cd = kd & self.CMASK
        cm = km & self.CMASK
        return ((cd | self.GUARD) - cm) & self.GUARD == self.GUARD

    def quot(self, km: int, kd: int) -> int:
        """km / kd, assuming divisibility."""
        head = (km >> self.comp_bits) - (kd >> self.comp_bits)
        comp = (km & self.CMASK) + (self.C0 - (kd & self.CMASK))
        return (head << self.comp_bits) | comp

    def lcm(self, k1: int, k2: int) -> int:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return self.encode(tuple(max(a, b) for a, b in zip(e1, e2)))

    def gcd_is_one(self, k1: int, k2: int) -> bool:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return all(a == 0 or b == 0 for a, b in zip(e1, e2))


# ---------------------------------------------------------------------------
# ring


def _positive_weights(var_degrees: Sequence[Multidegree]) -> tuple[int, ...]:
    """Find an integer functional w with w . deg(x) > 0 for every variable."""
    r = len(var_degrees[0])
    if all(all(c >= 0 for c in d) and any(c > 0 for c in d) for d in var_degrees):
        cand = (1,) * r
        if all(sum(w * c for w, c in zip(cand, d)) > 0 for d in var_degrees):
            return cand
    for bound in range(1, 8):
        for w in itertools.product(range(1, bound + 1), repeat=r):
            if max(w) != bound:
                continue
            if all(sum(a * c for a, c in zip(w, d)) > 0 for d in var_degrees):
                return w
    raise ValueError("no positive grading functional found; grading cone not pointed")


class RingSpec:
    """A multigraded polynomial ring over F_p with its irrelevant primes."""

    __slots__ = (
        "char", "var_degrees", "var_names", "irrelevant_primes",
        "dimension_vector", "rank_grading", "nvars", "weights", "codec",
        "_inv_cache",
    )

    def __init__(
        self,
        var_degrees: Sequence[Multidegree],
        irrelevant_primes: Sequence[Sequence[int]],
        char: int,
        var_names: Sequence[str] | None = None,
        dimension_vector: Multidegree | None = None,
        elim_index: int | None = None,
    ):
        if char < 2:
            raise ValueError("characteristic must be a prime >= 2")
        self.char = char
        self.var_degrees = tuple(tuple(d) for d in var_degrees)
        self.nvars = len(self.var_degrees)
        self.rank_grading = len(self.var_degrees[0])
        if any(len(d) != self.rank_grading for d in self.var_degrees):
            raise ValueError("inconsistent multidegree lengths")
        self.irrelevant_primes = tuple(tuple(p) for p in irrelevant_primes)
        self.dimension_vector = dimension_vector
        if var_names is None:
            var_names = [f"y{j}" for j in range(self.nvars)]
        self.var_names = tuple(var_names)
        self.weights = _positive_weights(self.var_degrees)
        per_var = tuple(
            sum(w * c for w, c in zip(self.weights, d)) for d in self.var_degrees
        )
        self.codec = MonomialCodec(per_var, elim_index=elim_index)
        self._inv_cache: dict[int, int] = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def product(cls, dims: Sequence[int], char: int = 32003) -> "RingSpec":
        """Cox ring of P^{n_1} x ... x P^{n_r}."""
        dims = tuple(dims)
        if not dims or any(n < 1 for n in dims):
            raise ValueError("dimension vector entries must be >= 1")
        r = len(dims)
        degrees: list[Multidegree] = []
        names: list[str] = []
        primes: list[list[int]] = []
        idx = 0
        for i, n in enumerate(dims):
            block = []
            for j in range(n + 1):
                degrees.append(tuple(1 if k == i else 0 for k in range(r)))
                names.append(f"x({i + 1},{j})")
                block.append(idx)
                idx += 1
            primes.append(block)
        return cls(degrees, primes, char, names, dimension_vector=dims)

    @classmethod
    def custom(
        cls,
        var_degrees: Sequence[Multidegree],
        irrelevant_primes: Sequence[Sequence[int]],
        char: int = 32003,
        var_names: Sequence[str] | None = None,
    ) -> "RingSpec":
        return cls(var_degrees, irrelevant_primes, char, var_names)

    @property
    def is_product(self) -> bool:
        return self.dimension_vector is not None

    def total_dim(self) -> int:
        """Dimension of the toric variety (#variables - Picard rank)."""
        return self.nvars - self.rank_grading

    # -- field arithmetic ---------------------------------------------------

    def inv(self, c: int) -> int:
        c %= self.char
        v = self._inv_cache.get(c)
        if v is None:
            v = pow(c, self.char - 2, self.char)
            self._inv_cache[c] = v
        return v

    # -- monomials ----------------------------------------------------------

    def mono_degree(self, key: int) -> Multidegree:
        exps = self.codec.decode(key)
        deg = [0] * self.rank_grading
        for e, d in zip(exps, self.var_degrees):
            if e:
                for k in range(self.rank_grading):
                    deg[k] += e * d[k]
        return tuple(deg)

    def monomials_of_degree(self, degree: Multidegree) -> list[int]:
        """All monomial keys of the given multidegree (finite by positivity)."""
        if self.is_product:
            dims = self.dimension_vector
            if any(c < 0 for c in degree):
                return []
            per_block = []
            for i, n in enumerate(dims):
                per_block.append(list(_weak_compositions(degree[i], n + 1)))
            keys = []
            for combo in itertools.product(*per_block):
                exps = tuple(itertools.chain.from_iterable(combo))
                keys.append(self.codec.encode(exps))
            return keys
        out: list[int] = []
        exps = [0] * self.nvars

        def rec(j: int, rem: Multidegree, wrem: int) -> None:
            if j == self.nvars:
                if all(c == 0 for c in rem):
                    out.append(self.codec.encode(tuple(exps)))
                return
            w = sum(a * c for a, c in zip(self.weights, self.var_degrees[j]))
            e = 0
            while w * e <= wrem:
                exps[j] = e
                rec(j + 1, vsub(rem, vscale(e, self.var_degrees[j])), wrem - w * e)
                e += 1
            exps[j] = 0

        wtot = sum(a * c for a, c in zip(self.weights, degree))
        if wtot >= 0:
            rec(0, tuple(degree), wtot)
        return sorted(out)

    def hilbert_series_free(self, degree: Multidegree) -> int:
        """dim_k S_degree."""
        if self.is_product:
            from math import comb
            if any(c < 0 for c in degree):
                return 0
            v = 1
            for n, c in zip(self.dimension_vector, degree):
                v *= comb(c + n, n)
            return v
        return len(self.monomials_of_degree(degree))

    # -- polynomials ---------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.codec.one: 1})

    def constant(self, c: int) -> "Polynomial":
        c %= self.char
        return Polynomial(self, {self.codec.one: c} if c else {})

    def variable(self, j: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[j] = 1
        return Polynomial(self, {self.codec.encode(exps): 1})

    def x(self, block: int, index: int) -> "Polynomial":
        """Product-ring variable x(block, index), block counted from 1."""
        if not self.is_product:
            raise ValueError("x(i,j) addressing requires a product ring")
        if block < 1 or block > len(self.dimension_vector):
            raise ValueError("factor index out of range")
        j = sum(n + 1 for n in self.dimension_vector[: block - 1]) + index
        if index < 0 or index > self.dimension_vector[block - 1]:
            raise ValueError("variable index out of range")
        return self.variable(j)

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        coeff %= self.char
        if not coeff:
            return self.zero()
        return Polynomial(self, {self.codec.encode(exps): coeff})

    def from_terms(self, terms: Iterable[tuple[Sequence[int], int]]) -> "Polynomial":
        d: dict[int, int] = {}
        for exps, c in terms:
            k = self.codec.encode(exps)
            c = (d.get(k, 0) + c) % self.char
            if c:
                d[k] = c
            else:
                d.pop(k, None)
        return Polynomial(self, d)

    def variables(self) -> list["Polynomial"]:
        return [self.variable(j) for j in range(self.nvars)]

    def var_index(self, name: str) -> int:
        return self.var_names.index(name)

    # -- ring extension for elimination --------------------------------------

    def with_elim_variable(self) -> "RingSpec":
        """Extend by one degree-zero variable t, ordered to eliminate it."""
        degrees = self.var_degrees + ((0,) * self.rank_grading,)
        names = self.var_names + ("t~",)
        ext = RingSpec.__new__(RingSpec)
        ext.char = self.char
        ext.var_degrees = degrees
        ext.nvars = self.nvars + 1
        ext.rank_grading = self.rank_grading
        ext.irrelevant_primes = self.irrelevant_primes
        ext.dimension_vector = None
        ext.var_names = names
        # weight 1 on t keeps the order weights positive even though deg t = 0
        ext.weights = self.weights
        per_var = self.codec.weights + (1,)
        ext.codec = MonomialCodec(per_var, elim_index=self.nvars)
        ext._inv_cache = {}
        return ext

    def __repr__(self) -> str:
        if self.is_product:
            dims = ",".join(str(n) for n in self.dimension_vector)
            return f"RingSpec(P({dims}), char {self.char})"
        return f"RingSpec(custom {self.nvars} vars, char {self.char})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingSpec)
            and self.char == other.char
            and self.var_degrees == other.var_degrees
            and self.irrelevant_primes == other.irrelevant_primes
        )

    def __hash__(self) -> int:
        return hash((self.char, self.var_degrees, self.irrelevant_primes))


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Element of a RingSpec: dict mapping packed monomial key -> coeff."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: dict[int, int]):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def copy(self) -> "Polynomial":
        return Polynomial(self.ring, dict(self.terms))

    def lead_key(self) -> int:
        return max(self.terms)

    def lead_coeff(self) -> int:
        return self.terms[max(self.terms)]

    def lead_monomial_exps(self) -> tuple[int, ...]:
        return self.ring.codec.decode(max(self.terms))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        p = self.ring.char
        d = dict(self.terms)
        for k, c in other.terms.items():
            v = (d.get(k, 0) + c) % p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Polynomial(self.ring, d)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        p = self.ring.char
        d = dict(self.terms)
        for k, c in other.terms.items():
            v = (d.get(k, 0) - c) % p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Polynomial(self.ring, d)

    def __neg__(self) -> "Polynomial":
        p = self.ring.char
        return Polynomial(self.ring, {k: p - c for k, c in self.terms.items()})

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.char
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {k: (c * v) % p for k, v in self.terms.items()})

    def mono_mul(self, key: int, coeff: int = 1) -> "Polynomial":
        """Multiply by a single monomial (packed key) and a coefficient."""
        ring = self.ring
        p = ring.char
        coeff %= p
        if not coeff or not self.terms:
            return ring.zero()
        shift = key - ring.codec.C0
        return Polynomial(ring, {k + shift: (c * coeff) % p for k, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        ring = self.ring
        p = ring.char
        if not self.terms or not other.terms:
            return ring.zero()
        wmax = ring.codec.wdeg(max(self.terms)) + ring.codec.wdeg(max(other.terms))
        if wmax > EXP_MAX:
            raise OverflowError("weighted degree exceeds packed-monomial capacity")
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        C0 = ring.codec.C0
        d: dict[int, int] = {}
        for k2, c2 in b.items():
            shift = k2 - C0
            for k1, c1 in a.items():
                k = k1 + shift
                v = (d.get(k, 0) + c1 * c2) % p
                if v:
                    d[k] = v
                else:
                    d.pop(k, None)
        return Polynomial(ring, d)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- grading -------------------------------------------------------------

    def is_homogeneous(self) -> bool:
        degs = {self.ring.mono_degree(k) for k in self.terms}
        return len(degs) <= 1

    def multidegree(self) -> Multidegree:
        if not self.terms:
            raise ValueError("the zero polynomial has no multidegree")
        degs = {self.ring.mono_degree(k) for k in self.terms}
        if len(degs) > 1:
            witness = sorted(degs)[:2]
            raise ValueError(f"inhomogeneous polynomial: degrees {witness[0]} and {witness[1]} both occur")
        return next(iter(degs))

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            exps = ring.codec.decode(k)
            factors = []
            for name, e in zip(ring.var_names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"
