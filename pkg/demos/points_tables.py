"""Six general points in P^1 x P^1 x P^2: every way to shorten a resolution.

Reproduces the two summary tables: virtual resolutions of the pair (S/I, d)
for several degrees d, and resolutions of I intersected with powers B^a of
the irrelevant ideal.  Takes about a minute.

Run:  python demos/points_tables.py
"""

import time

from virtres import (
    BettiTable,
    QuotientModule,
    RingSpec,
    free_resolution,
    intersect_with_irrelevant_power,
    is_virtual,
    points_ideal,
    random_points,
    virtual_of_pair,
)

ring = RingSpec.product([1, 1, 2], char=32003)
cfg = random_points(ring, 6, seed=42)
print(f"# sampling 6 points with seed {cfg.seed}")
I = points_ideal(cfg)
M = QuotientModule.cyclic(I)

t0 = time.time()
B = BettiTable.from_complex(free_resolution(M))
print(f"\nminimal resolution totals: {tuple(B.totals)}")
print(f"distinct twists: {B.distinct_twists}   ({time.time() - t0:.1f}s)")

print("\n== virtual resolutions of the pair (S/I, d) ==")
for d in [(5, 0, 0), (2, 1, 0), (1, 0, 1), (0, 0, 2)]:
    t0 = time.time()
    G = BettiTable.from_complex(virtual_of_pair(M, d))
    print(
        f"d = {d}: totals {tuple(G.totals)}, "
        f"{G.distinct_twists} distinct twists ({time.time() - t0:.1f}s)"
    )

print("\n== resolutions of S/(I cap B^a) ==")
for a in [(2, 1, 0), (3, 3, 0)]:
    t0 = time.time()
    J = intersect_with_irrelevant_power(I, a)
    F = free_resolution(QuotientModule.cyclic(J))
    G = BettiTable.from_complex(F)
    ok, _ = is_virtual(F, I)
    print(
        f"a = {a}: totals {tuple(G.totals)}, length {F.length}, "
        f"virtual: {ok} ({time.time() - t0:.1f}s)"
    )
