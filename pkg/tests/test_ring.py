"""Ring, grading, and polynomial arithmetic unit tests."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from virtres import Polynomial, RingSpec, vadd, vleq, vsub

R11 = RingSpec.product([1, 1], char=101)
R12 = RingSpec.product([1, 2], char=32003)


def random_poly(ring, rng, degree, nterms=3):
    keys = ring.monomials_of_degree(degree)
    return Polynomial(
        ring, {k: rng.randrange(1, ring.char) for k in rng.sample(keys, min(nterms, len(keys)))}
    )


# -- codec ------------------------------------------------------------------


@given(st.lists(st.integers(min_value=0, max_value=40), min_size=5, max_size=5))
def test_codec_round_trip(exps):
    exps = tuple(exps)
    assert R12.codec.decode(R12.codec.encode(exps)) == exps


@given(
    st.lists(st.integers(min_value=0, max_value=15), min_size=4, max_size=4),
    st.lists(st.integers(min_value=0, max_value=15), min_size=4, max_size=4),
)
def test_codec_mul_divides_quot(e1, e2):
    c = R11.codec
    k1, k2 = c.encode(e1), c.encode(e2)
    prod = c.mul(k1, k2)
    assert c.decode(prod) == tuple(a + b for a, b in zip(e1, e2))
    assert c.divides(k1, prod)
    assert c.quot(prod, k1) == k2
    assert c.decode(c.lcm(k1, k2)) == tuple(max(a, b) for a, b in zip(e1, e2))


def test_mono_degree_additivity():
    c = R12.codec
    k1 = c.encode((2, 1, 0, 3, 0))
    k2 = c.encode((0, 4, 1, 0, 2))
    assert vadd(R12.mono_degree(k1), R12.mono_degree(k2)) == R12.mono_degree(c.mul(k1, k2))


# -- graded pieces ----------------------------------------------------------


@pytest.mark.parametrize("degree", [(0, 0), (1, 0), (2, 3), (5, 2)])
def test_monomial_count_matches_binomials(degree):
    keys = R12.monomials_of_degree(degree)
    assert len(set(keys)) == len(keys)
    expected = math.comb(degree[0] + 1, 1) * math.comb(degree[1] + 2, 2)
    assert len(keys) == expected == R12.hilbert_series_free(degree)
    assert all(R12.mono_degree(k) == degree for k in keys)


def test_monomials_of_negative_degree_empty():
    assert R12.monomials_of_degree((-1, 2)) == []
    assert R12.hilbert_series_free((-1, 2)) == 0


def test_custom_ring_graded_pieces():
    degrees = [(1, 0), (1, 0), (-2, 1), (0, 1)]
    primes = [[0, 1], [2, 3]]
    R = RingSpec.custom(degrees, primes, char=101, var_names=["y0", "y1", "y2", "y3"])
    keys = R.monomials_of_degree((1, 1))
    # y0*y3, y1*y3, y0^3*y2, y0^2*y1*y2, y0*y1^2*y2, y1^3*y2
    assert len(keys) == 6 == R.hilbert_series_free((1, 1))
    assert all(R.mono_degree(k) == (1, 1) for k in keys)


# -- polynomial arithmetic --------------------------------------------------


@given(st.data())
@settings(max_examples=50, deadline=None)
def test_ring_axioms(data):
    import random

    rng = random.Random(data.draw(st.integers(0, 10**6)))
    a = random_poly(R11, rng, (1, 1))
    b = random_poly(R11, rng, (1, 1))
    c = random_poly(R11, rng, (2, 0))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a - a).terms == {}
    assert a * R11.one() == a
    assert (a * R11.zero()).terms == {}


def test_power_and_scale():
    x, y = R11.x(1, 0), R11.x(2, 0)
    f = x + y
    assert f ** 2 == f * f
    assert f.scale(100) == -f
    assert (f.scale(0)).terms == {}


def test_multidegree_and_homogeneity():
    x10, x20 = R11.x(1, 0), R11.x(2, 0)
    f = x10 * x20
    assert f.is_homogeneous() and f.multidegree() == (1, 1)
    g = x10 + x20
    assert not g.is_homogeneous()
    with pytest.raises(ValueError) as exc:
        g.multidegree()
    # the error names both offending degrees
    assert "(0, 1)" in str(exc.value) and "(1, 0)" in str(exc.value)


def test_variable_addressing():
    assert str(R12.x(1, 0)) == "x(1,0)"
    assert R12.variable(R12.var_index("x(2,2)")) == R12.x(2, 2)
    with pytest.raises(ValueError):
        R12.x(1, 5)
    with pytest.raises(ValueError):
        R12.var_index("nope")


def test_elim_extension():
    ext = R11.with_elim_variable()
    assert ext.nvars == R11.nvars + 1
    t = ext.variable(ext.nvars - 1)
    assert ext.mono_degree(next(iter(t.terms))) == (0, 0)
    # the eliminated variable dominates the term order
    x = ext.variable(0)
    f = t + x ** 3
    assert max(f.terms) == next(iter(t.terms))


def test_vector_helpers():
    assert vadd((1, 2), (3, -1)) == (4, 1)
    assert vsub((1, 2), (3, -1)) == (-2, 3)
    assert vleq((1, 2), (1, 3)) and not vleq((2, 2), (1, 3))


def test_irrelevant_primes_are_primitive_collections():
    assert R12.irrelevant_primes == ((0, 1), (2, 3, 4)) or [
        list(p) for p in R12.irrelevant_primes
    ] == [[0, 1], [2, 3, 4]]
