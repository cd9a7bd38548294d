"""Ideal operations: intersection, colon, saturation, truncation, Hilbert data."""

import itertools
import random

import pytest

from virtres import (
    Polynomial,
    QuotientModule,
    RingSpec,
    Submodule,
    Subquotient,
    b_saturate,
    codim,
    hilbert_function,
    ideal,
    intersect,
    irrelevant_power,
    is_b_torsion,
    quotient,
    saturate,
    saturate_by_ideal,
    truncate,
)
from virtres.fixtures import (
    curve_ideal,
    curve_ring,
    two_planes_ideal,
)

R11 = RingSpec.product([1, 1], char=101)


def same_ideal(A: Submodule, B: Submodule) -> bool:
    return A.gb().reduces_to_zero(B.gens) and B.gb().reduces_to_zero(A.gens)


def monomial_ideal(ring, exps_list):
    return ideal(ring, [ring.monomial(e) for e in exps_list])


# -- intersection -----------------------------------------------------------


@pytest.mark.parametrize("seed", range(5))
def test_intersect_monomial_oracle(seed):
    # for monomial ideals the intersection is generated by pairwise lcms
    rng = random.Random(seed)
    mk = lambda: [
        tuple(rng.randrange(3) for _ in range(4)) for _ in range(rng.randrange(1, 4))
    ]
    A = monomial_ideal(R11, mk())
    B = monomial_ideal(R11, mk())
    expected = monomial_ideal(
        R11,
        [
            tuple(max(a, b) for a, b in zip(e1, e2))
            for e1 in (R11.codec.decode(next(iter(g.coordinate(0).terms))) for g in A.gens)
            for e2 in (R11.codec.decode(next(iter(g.coordinate(0).terms))) for g in B.gens)
        ],
    )
    assert same_ideal(intersect(A, B), expected)


def test_intersect_contains_and_is_contained():
    x0, x1, y0, y1 = R11.variables()
    A = ideal(R11, [x0 * y0 + x1 * y1, x0 ** 2 * y1])
    B = ideal(R11, [x0 * y1, x1 * y0 - x0 * y1])
    C = intersect(A, B)
    assert A.gb().reduces_to_zero(C.gens)
    assert B.gb().reduces_to_zero(C.gens)
    # a product of one generator from each side lies in the intersection
    prod = (x0 * y0 + x1 * y1) * (x0 * y1)
    assert C.gb().contains(C.module.wrap(prod))


# -- colon and saturation ---------------------------------------------------


def test_quotient_monomial_oracle():
    x0, x1, y0, y1 = R11.variables()
    I = monomial_ideal(R11, [(2, 0, 1, 0), (1, 0, 0, 2)])  # <x0^2 y0, x0 y1^2>
    Q = quotient(I, x0)
    assert same_ideal(Q, monomial_ideal(R11, [(1, 0, 1, 0), (0, 0, 0, 2)]))


def test_saturate_strips_variable_powers():
    x0, x1, y0, y1 = R11.variables()
    I = ideal(R11, [x0 ** 3 * (x0 * y0 + x1 * y1), x0 ** 2 * y1 ** 2])
    S = saturate(I, x0)
    # the saturation contains I, is a fixed point of the colon, and every
    # generator lands back in I after multiplying by a power of x0
    assert S.gb().reduces_to_zero(I.gens)
    assert same_ideal(quotient(S, x0), S)
    gbI = I.gb()
    for g in S.gens:
        f = g.coordinate(0)
        assert any(
            gbI.contains(I.module.wrap(f * x0 ** k)) for k in range(8)
        )
    # sanity witnesses found by hand: y1^2 and y0*y1 must appear
    assert S.gb().contains(S.module.wrap(y1 ** 2))
    assert S.gb().contains(S.module.wrap(y0 * y1))


def test_saturate_by_ideal_matches_iterated_variable_saturation():
    x0, x1, y0, y1 = R11.variables()
    I = ideal(R11, [x0 ** 2 * y0 ** 2, x0 ** 2 * x1 * y1, x1 ** 3 * y0 * y1])
    J = ideal(R11, [x0, x1])
    left = saturate_by_ideal(I, J)
    # saturating by <x0,x1> = intersecting the two single-variable saturations
    right = intersect(saturate(I, x0), saturate(I, x1))
    assert same_ideal(left, right)


def test_b_saturate_idempotent_and_fixes_saturated_ideals():
    I = curve_ideal()
    assert same_ideal(b_saturate(I), I)
    x0, x1, y0, y1 = R11.variables()
    J = ideal(R11, [x0 * y0, x0 * y1, x1 * y0 ** 2])
    S1 = b_saturate(J)
    assert same_ideal(b_saturate(S1), S1)
    assert S1.gb().reduces_to_zero(J.gens)


# -- B and its powers -------------------------------------------------------


def test_irrelevant_power_basic():
    B11 = irrelevant_power(R11, (1, 1))
    x0, x1, y0, y1 = R11.variables()
    expected = ideal(R11, [x0 * y0, x0 * y1, x1 * y0, x1 * y1])
    assert same_ideal(B11, expected)
    # a = 0 in one factor drops that prime
    B10 = irrelevant_power(R11, (1, 0))
    assert same_ideal(B10, ideal(R11, [x0, x1]))


def test_irrelevant_power_is_intersection_of_prime_powers():
    R = RingSpec.product([1, 2], char=101)
    a = (2, 1)
    B = irrelevant_power(R, a)
    P1 = ideal(R, [R.x(1, 0), R.x(1, 1)])
    P1sq = ideal(R, [g1.coordinate(0) * g2.coordinate(0) for g1 in P1.gens for g2 in P1.gens])
    P2 = ideal(R, [R.x(2, j) for j in range(3)])
    assert same_ideal(B, intersect(P1sq, P2))


# -- truncation and Hilbert functions ----------------------------------------


def test_truncate_degrees_and_hilbert_function():
    x0, x1, y0, y1 = R11.variables()
    I = ideal(R11, [x0 * y0 + x1 * y1])
    T = truncate(I, (2, 1))
    for g in T.minimalized().gens:
        d = g.multidegree()
        assert d[0] >= 2 and d[1] >= 1
    for p in itertools.product(range(2, 5), range(1, 4)):
        assert hilbert_function(T, p) == hilbert_function(I, p)
    assert hilbert_function(T, (1, 1)) == 0


def test_hilbert_function_free_and_point():
    M = QuotientModule(
        curve_ideal().module, Submodule(curve_ideal().module, [])
    )
    R = curve_ring()
    assert hilbert_function(M, (2, 3)) == R.hilbert_series_free((2, 3))
    # a single point has Hilbert function 1 in every nonnegative degree
    x0, x1, y0, y1 = R11.variables()
    P = ideal(R11, [x1, y1])
    for p in itertools.product(range(3), repeat=2):
        assert hilbert_function(QuotientModule.cyclic(P), p) == 1


def test_curve_hilbert_polynomial_values():
    # HF(S/I) agrees with the degree-(2,8) genus-4 curve polynomial 2a+8b-3
    M = QuotientModule.cyclic(curve_ideal())
    for p in [(3, 2), (4, 3), (3, 4)]:
        assert hilbert_function(M, p) == 2 * p[0] + 8 * p[1] - 3


# -- codimension and torsion --------------------------------------------------


def test_codim_examples():
    assert codim(curve_ideal()) == 2
    assert codim(two_planes_ideal()) == 2
    x0, x1, y0, y1 = R11.variables()
    assert codim(ideal(R11, [x1, y1])) == 2
    assert codim(ideal(R11, [x0])) == 1
    assert codim(Submodule(ideal(R11, [x0]).module, [])) == 0


def test_b_torsion_detection():
    x0, x1, y0, y1 = R11.variables()
    B = irrelevant_power(R11, (1, 1))
    S1 = Submodule(B.module, [B.module.wrap(R11.one())])
    assert is_b_torsion(Subquotient(S1, B))
    I = ideal(R11, [x0 * y0])
    assert not is_b_torsion(Subquotient(S1, I))
    assert is_b_torsion(Subquotient(I, I))
