"""Ends of a few infinite graphs seen through growing balls."""

from sepforest import squares
from sepforest.boolring import psi, separating_count
from sepforest.ends import accessibility_cut, end_spectrum
from sepforest.lazy import biinfinite_path, grid2d, regular_tree, scaled_squares
from sepforest.treedecomp import check_property_star, make_system

for name, lazy in [("line", biinfinite_path()), ("grid", grid2d()), ("cubic tree", regular_tree(3)), ("scaled squares", scaled_squares())]:
    counts = [len(end_spectrum(lazy, r)) for r in range(1, 6)]
    print(f"{name:15s} end approximations at radii 1..5: {counts}")

lazy = scaled_squares()
for r in range(3, 7):
    a, b = end_spectrum(lazy, r)
    print(f"scaled squares radius {r}: edges needed to split the two ends = {accessibility_cut(lazy, a, b, r + 2).value}")

print("\nchain of nested cycles around (1,1):")
for R in range(2, 6):
    trunc = squares.truncation(R)
    chain = squares.chain_members(trunc)
    star = check_property_star(make_system(chain, trunc.graph)).ok
    between = separating_count([psi(trunc.graph, s) for s in chain], squares.point(4, 4), squares.point(1, 1))
    print(f"  radius {R}: {len(chain)} members, property (*) {star}, members separating (4,4) from (1,1): {between}")
