"""Built-in example ideals and expected invariants used by tests and demos."""

from __future__ import annotations

from .ring import RingSpec, Polynomial
from .ideals import Submodule, ideal


def curve_ring(char: int = 32003) -> RingSpec:
    return RingSpec.product([1, 2], char=char)


def curve_ideal(ring: RingSpec | None = None) -> Submodule:
    """A B-saturated ideal of a hyperelliptic genus-4 curve of bidegree (2,8)
    in P^1 x P^2.

    Eight generators of degrees (3,1), (2,2), (2,3)^2, (1,5)^3, (0,8).
    """
    R = ring or curve_ring()
    x10, x11 = R.x(1, 0), R.x(1, 1)
    x20, x21, x22 = R.x(2, 0), R.x(2, 1), R.x(2, 2)
    g1 = x11**3 * x20 - x11**3 * x21 + x10**3 * x22
    g2 = x10**2 * x20**2 + x11**2 * x21**2 + x10 * x11 * x22**2
    g3 = (
        x11**2 * x20**3
        - x11**2 * x20**2 * x21
        - x10 * x11 * x21**2 * x22
        - x10**2 * x22**3
    )
    g4 = (
        x10 * x11 * x20**3
        - x10 * x11 * x20**2 * x21
        - x10**2 * x21**2 * x22
        + x11**2 * x20 * x22**2
        - x11**2 * x21 * x22**2
    )
    g5 = (
        x11 * x20**3 * x21**2
        - x11 * x20**2 * x21**3
        - x10 * x21**4 * x22
        - x10 * x20**3 * x22**2
        + x10 * x20**2 * x21 * x22**2
        - x11 * x20 * x22**4
        + x11 * x21 * x22**4
    )
    g6 = (
        x11 * x20**5
        - x11 * x20**4 * x21
        - x10 * x20**2 * x21**2 * x22
        + x11 * x21**2 * x22**3
        + x10 * x22**5
    )
    g7 = (
        x10 * x20**5
        - x10 * x20**4 * x21
        + x11 * x21**4 * x22
        + x11 * x20**3 * x22**2
        - x11 * x20**2 * x21 * x22**2
        + x10 * x21**2 * x22**3
    )
    g8 = (
        x20**8
        - 2 * x20**7 * x21
        + x20**6 * x21**2
        + x21**6 * x22**2
        + 3 * x20**3 * x21**2 * x22**3
        - 3 * x20**2 * x21**3 * x22**3
        - x20 * x22**7
        + x21 * x22**7
    )
    return ideal(R, [g1, g2, g3, g4, g5, g6, g7, g8])


CURVE_BETTI_TOTALS = (1, 8, 12, 6, 1)
CURVE_TWISTS = {
    0: {(0, 0): 1},
    1: {(3, 1): 1, (2, 2): 1, (2, 3): 2, (1, 5): 3, (0, 8): 1},
    2: {(3, 3): 3, (2, 5): 6, (1, 7): 1, (1, 8): 2},
    3: {(3, 5): 3, (2, 7): 2, (2, 8): 1},
    4: {(3, 7): 1},
}

# virtual resolution of the pair (curve, (2,1))
CURVE_PAIR_21_TOTALS = (1, 4, 3)
CURVE_PAIR_21_TWISTS = {
    0: {(0, 0): 1},
    1: {(3, 1): 1, (2, 2): 1, (2, 3): 2},
    2: {(3, 3): 3},
}

# Beilinson-style shape of the curve at d = (2,2):
# ranks per homological index, as {twist: rank}
CURVE_BEILINSON_22 = {
    0: {(2, 2): 17},
    1: {(2, 3): 26, (3, 2): 15},
    2: {(2, 4): 9, (3, 3): 22},
    3: {(3, 4): 7},
}


def surface_ring(char: int = 32003) -> RingSpec:
    return RingSpec.product([1, 3], char=char)


def surface_ideal(ring: RingSpec | None = None) -> Submodule:
    """A B-saturated ideal of a surface in P^1 x P^3 with a length-3 resolution."""
    R = ring or surface_ring()
    x10, x11 = R.x(1, 0), R.x(1, 1)
    x20, x21, x22, x23 = R.x(2, 0), R.x(2, 1), R.x(2, 2), R.x(2, 3)
    s1 = x11 * x21**2 + x10 * x20 * x22 + x11 * x21 * x23
    s2 = x10**2 * x21**2 + x10 * x11 * x22**2 + x11**2 * x20 * x23
    s3 = (
        x10 * x21**4
        - x10 * x20 * x22**3
        + x10 * x21**3 * x23
        - x11 * x20**2 * x22 * x23
    )
    s4 = (
        x21**6
        - x20 * x21**2 * x22**3
        + 2 * x21**5 * x23
        + x20**3 * x22**2 * x23
        - x20 * x21 * x22**3 * x23
        + x21**4 * x23**2
    )
    return ideal(R, [s1, s2, s3, s4])


SURFACE_BETTI_TOTALS = (1, 4, 4, 1)
SURFACE_TWISTS = {
    0: {(0, 0): 1},
    1: {(2, 2): 1, (1, 2): 1, (1, 4): 1, (0, 6): 1},
    2: {(2, 4): 2, (1, 6): 2},
    3: {(2, 6): 1},
}


def two_planes_ring(char: int = 32003) -> RingSpec:
    return RingSpec.product([2, 2], char=char)


def two_planes_ideal(ring: RingSpec | None = None) -> Submodule:
    """The B-saturated ideal <x(1,0),x(1,1)> ∩ <x(2,0),x(2,1)> in P^2 x P^2.

    Codimension 2, but it admits no length-2 virtual resolution.
    """
    R = ring or two_planes_ring()
    return ideal(
        R,
        [R.x(1, i) * R.x(2, j) for i in range(2) for j in range(2)],
    )


TWO_PLANES_BETTI_TOTALS = (1, 4, 4, 1)
TWO_PLANES_TWISTS = {
    0: {(0, 0): 1},
    1: {(1, 1): 4},
    2: {(2, 1): 2, (1, 2): 2},
    3: {(2, 2): 1},
}


def hirzebruch_ring(char: int = 32003) -> RingSpec:
    """Cox ring of a Hirzebruch surface (custom grading with a negative entry)."""
    degrees = [(1, 0), (1, 0), (-2, 1), (0, 1)]
    primes = [[0, 1], [2, 3]]
    names = ["y0", "y1", "y2", "y3"]
    return RingSpec.custom(degrees, primes, char=char, var_names=names)


def hirzebruch_ideal(ring: RingSpec | None = None) -> Submodule:
    """B-saturated ideal of the scheme-theoretic intersection of two curves
    on the Hirzebruch surface F_3."""
    from .ideals import b_saturate

    R = ring or hirzebruch_ring()
    y0, y1, y2, y3 = R.variables()
    f = y0**5 * y2**2 + y1 * y3**2  # degree (1, 2)
    g = y0 * y3 + y2 * y1**3  # degree (1, 1)
    return b_saturate(ideal(R, [f, g])).minimalized()


HIRZEBRUCH_PDIM = 3
# pdim S/(I ∩ <y0,y1>^a) drops to 2 exactly at a = 4
HIRZEBRUCH_CAP_PDIM = {1: 3, 2: 3, 3: 3, 4: 2, 5: 2}


def del_pezzo_ring(char: int = 32003) -> RingSpec:
    """Cox ring of the del Pezzo surface of degree 7 (P^2 blown up twice)."""
    degrees = [(1, 0, 0), (-1, 1, 0), (1, -1, 1), (0, 1, -1), (0, 0, 1)]
    primes = [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
    names = [f"y{j}" for j in range(5)]
    return RingSpec.custom(degrees, primes, char=char, var_names=names)


DEL_PEZZO_POINTS = [
    (1, 1, 1, 1, 1),
    (2, 1, 3, 1, 5),
    (7, 1, 11, 1, 13),
]

DEL_PEZZO_MINIMAL_TWISTS = {
    0: {(0, 0, 0): 1},
    1: {(1, 0, 1): 1, (0, 1, 1): 1, (1, 1, 0): 1, (0, 0, 3): 1, (3, 0, 0): 1},
    2: {(0, 1, 2): 1, (1, 1, 1): 2, (2, 1, 0): 1, (1, 0, 3): 1, (3, 0, 1): 1},
    3: {(1, 1, 2): 1, (2, 1, 1): 1},
}

DEL_PEZZO_VIRTUAL_TWISTS = {
    0: {(0, 0, 0): 1},
    1: {(0, 2, 0): 3},
    2: {(0, 3, 0): 2},
}


# six general points in P^1 x P^1 x P^2 (Table data)
SIX_POINTS_SPACE = (1, 1, 2)
SIX_POINTS_MINIMAL_TOTALS = (1, 37, 120, 166, 120, 45, 7)
SIX_POINTS_MINIMAL_DISTINCT = 78
SIX_POINTS_PAIR_TABLE = {
    (5, 0, 0): ((1, 24, 50, 33, 6), 18),
    (2, 1, 0): ((1, 29, 73, 66, 21), 22),
    (1, 0, 1): ((1, 25, 63, 57, 18), 15),
    (0, 0, 2): ((1, 22, 51, 42, 12), 13),
}
SIX_POINTS_BSAT_TABLE = {
    (2, 1, 0): ((1, 17, 34, 24, 6), 12),
    (3, 3, 0): ((1, 22, 42, 27, 6), 13),
}
SIX_POINTS_CODIM = 4
