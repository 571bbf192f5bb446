"""From a tile digit set to its periodic tiling set and exact measure.

Iterating J -> b*J + D from the full integer lattice produces a
decreasing chain of periodic sets.  For a tile the chain freezes after
finitely many steps; the frozen entry is the unique self-replicating
tiling set, and the tile's Lebesgue measure is the reciprocal of its
density.
"""

from tilescope import (
    DigitSet,
    measure_report,
    replicating_chain,
    self_replicating_tiling,
    stabilization_exponent,
    tile_measure,
    verify_self_replicating,
)

print(__doc__)

d = DigitSet(4, (0, 1, 8, 9))
chain = replicating_chain(d, 4)
print(f"digits {d.digits}, base {d.base}")
for k, entry in enumerate(chain.entries):
    print(
        f"  J_{k}: period {entry.period}, residues {entry.residues}, "
        f"density {entry.density()}"
    )

m = stabilization_exponent(d, 8)
j = self_replicating_tiling(d, m)
print(f"chain freezes at m = {m}")
print(f"tiling set: {j.residues} + {j.period}Z")
print(f"self-replication b*J + D == J verified: {verify_self_replicating(j, d)}")
print(f"tile measure = 1/density = {tile_measure(j)}")

print()
print("Outer interval covers converge to the exact measure from above:")
report = measure_report(d, 6, j)
for k, length in enumerate(report.lengths, start=1):
    print(f"  level {k}: covered length {length}")
print(f"  target {report.target}, remaining gap {report.gap}")

print()
print("A set that needs two stages before the chain settles:")
d2 = DigitSet(4, (0, 1, 32, 33))
chain2 = replicating_chain(d2, 4)
for k, entry in enumerate(chain2.entries):
    print(f"  J_{k}: period {entry.period}, residues {entry.residues}")
print(f"  stabilization exponent: {stabilization_exponent(d2, 8)}")
