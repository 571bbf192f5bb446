"""Extracting the block structure that certifies a tile digit set.

A digit set E with #E == modulus is in (m-stage) skew product form when
its residue classes mod the modulus split as a_j + modulus^m * B_j with
every A + B_j a complete residue system.  Detection is canonical: the
blocks must be the residue classes, so there is nothing to search.  The
classic 12-digit example decomposes in one stage; staged sets decompose
after lifting the expansion.
"""

from tilescope import (
    DigitSet,
    expand,
    gen_product_form,
    gen_weak_product_form,
    is_tile,
    lift_stage,
    skew_decompose,
    verify_decomposition,
)

print(__doc__)

twelve = (0, 1, 4, 8, 9, 17, 25, 33, 41, 72, 76, 80)
dec = skew_decompose(twelve, 12, 1)
print(f"digits {twelve}, base 12:")
print(f"  representatives A = {dec.A}")
for a, b in zip(dec.A, dec.Bs):
    print(f"  class of {a:2d}: {a} + 12*{b}")
print(f"  re-verified: {verify_decomposition(dec, twelve)}")

print()
print("Failure is just as informative: {0,1,2,5} has unbalanced classes.")
print(f"  skew_decompose -> {skew_decompose((0, 1, 2, 5), 4, 1)}")

print()
print("A two-stage set refuses stage 1 but splits at stage 2, and the")
print("stage lift rewrites it as a one-stage form for the level-2 digits:")
d = DigitSet(4, (0, 1, 32, 33))
print(f"  stage 1: {skew_decompose(d.digits, 4, 1)}")
staged = skew_decompose(d.digits, 4, 2)
print(f"  stage 2: A = {staged.A}, blocks = {staged.Bs}")
lifted = lift_stage(staged)
print(f"  lifted to modulus {lifted.base}: A = {lifted.A}")
print(
    f"  lift verified against the level-2 expansion: "
    f"{verify_decomposition(lifted, expand(d, 2).values)}"
)

print()
print("Generators go the other way: build tiles with prescribed structure.")
prod = gen_product_form([[0, 1], [0, 2]], 4)
print(f"  product form [0,1] + 4*[0,2]  -> {prod.digits}, tile = {is_tile(prod)[0]}")
weak = gen_weak_product_form([0, 1], [0, 2], 1, {(1, 2): 1})
print(f"  weak form with one offset     -> {weak.digits}, tile = {is_tile(weak)[0]}")
deep = gen_weak_product_form([0, 1], [0, 2], 3)
print(f"  three-stage weak form         -> {deep.digits}, tile = {is_tile(deep)[0]}")
