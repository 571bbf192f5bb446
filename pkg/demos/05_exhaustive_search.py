"""Sweeping every normalized digit set up to a bound.

The search harness classifies each set twice over: the automaton decides
tile status, and an independent staged-decomposition probe looks for the
structure that is supposed to exist exactly for tiles.  Disagreements
would be reported as violations; none exist.
"""

from tilescope.cli import run_search

print(__doc__)

for base, bound in [(3, 15), (4, 16)]:
    records, summary = run_search(base, bound, m_max=6, workers=1)
    print(
        f"base {base}, digits inside [0, {bound}]: {summary['count']} sets, "
        f"{summary['tiles']} tiles, {summary['non_tiles']} non-tiles, "
        f"{summary['inconclusive']} inconclusive"
    )
    print(f"  largest stage needed: {summary['max_m']}")
    print(f"  violations: {summary['violations']}")
    stages = sorted({r["m"] for r in records if r["m"] is not None})
    for m in stages:
        sample = [r["digits"] for r in records if r["m"] == m][:4]
        print(f"  stage {m} examples: {sample}")
    print()

print("For a prime base, tiles are exactly the complete residue systems:")
records, _ = run_search(3, 15, m_max=4, workers=1)
tiles = [r["digits"] for r in records if r["tile"]]
assert all(sorted(d % 3 for d in digits) == [0, 1, 2] for digits in tiles)
print(f"  all {len(tiles)} tiles for base 3 hit every residue class once")
