"""Custom toric Cox rings: a Hirzebruch surface and a del Pezzo surface.

Shows that the machinery is not limited to products of projective spaces:
gradings by an arbitrary Picard lattice and irrelevant ideals given by
their minimal primes work throughout.

Run:  python demos/custom_toric.py
"""

from virtres import (
    BettiTable,
    PointConfig,
    QuotientModule,
    free_resolution,
    intersect_with_irrelevant_power,
    points_ideal,
    search_short_resolution_exponent,
)
from virtres.fixtures import (
    DEL_PEZZO_POINTS,
    del_pezzo_ring,
    hirzebruch_ideal,
)

print("== Hirzebruch surface F_3 ==")
I = hirzebruch_ideal()
F = free_resolution(QuotientModule.cyclic(I))
print(f"pdim S/I = {F.length}")
for a1 in range(1, 6):
    J = intersect_with_irrelevant_power(I, (a1, 0))
    pdim = free_resolution(QuotientModule.cyclic(J)).length
    print(f"pdim S/(I cap <y0,y1>^{a1}) = {pdim}")
a, G = search_short_resolution_exponent(I)
print(f"first exponent reaching pdim = dim X: a = {a}")

print("\n== del Pezzo surface of degree 7 (P^2 blown up twice) ==")
ring = del_pezzo_ring()
cfg = PointConfig(ring, [(pt,) for pt in DEL_PEZZO_POINTS])
P = points_ideal(cfg)
B = BettiTable.from_complex(free_resolution(QuotientModule.cyclic(P)))
print("minimal resolution of 3 points:")
print(B)
