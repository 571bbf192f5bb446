"""Deciding whether a digit set tiles, with certificates either way.

A digit set D for base b tiles the line exactly when every level of the
expansion D + b*D + b^2*D + ... stays collision free.  tilescope settles
the infinite family of conditions at once by walking a finite carry
automaton; when the answer is no, it hands back two digit strings with
the same value.
"""

from tilescope import DigitSet, approx, expand, is_tile, is_tile_oracle

print(__doc__)

good = DigitSet(4, (0, 1, 8, 9))
bad = DigitSet(4, (0, 1, 2, 5))

for d in (good, bad):
    tile, witness = is_tile(d)
    print(f"digits {d.digits} in base {d.base}: tile = {tile}")
    if witness is not None:
        lhs = " + ".join(f"{x}*{d.base}^{i}" for i, x in enumerate(witness.left))
        rhs = " + ".join(f"{x}*{d.base}^{i}" for i, x in enumerate(witness.right))
        print(f"  collision: {lhs} = {rhs} = {witness.value}")

print()
print("The brute-force oracle agrees level by level:")
for k in (1, 2, 3, 4):
    e_good, e_bad = expand(good, k), expand(bad, k)
    print(
        f"  level {k}: {len(e_good.values):4d}/{4**k:4d} distinct values "
        f"for {good.digits}, {len(e_bad.values):4d}/{4**k:4d} for {bad.digits}"
    )
print("  oracle verdicts:", is_tile_oracle(good, 8), is_tile_oracle(bad, 8))

print()
print("Collisions show up geometrically: the interval cover of the")
print("attractor keeps its length for a tile and shrinks for a non-tile.")
for k in (1, 2, 3, 4):
    lg, lb = approx(good, k).total_length, approx(bad, k).total_length
    print(f"  level {k}: cover length {lg} vs {lb} (= {float(lb):.4f})")
