"""Flipping local rotations of a 3-connected planar graph and lifting to the double cover."""

from sepforest import corpus
from sepforest.graph import connected_components
from sepforest.planar import (
    component_cocycles,
    double_cover,
    is_local_isomorphism,
    rotation_choice,
    spherical_cocycle,
    two_basis,
)

g = corpus.get("octahedron")
rs = rotation_choice(g)
print("rotation at each vertex:", rs.as_dict())
print("bounded faces of the embedding form a 2-basis of", len(two_basis(g)), "cycles")

flipped = {0, 3}
rot = rs.reversed_at(flipped).as_dict()
c = spherical_cocycle(g, rot)
print("\nreversing the rotations at", sorted(flipped))
print("edges where neighbouring rotations disagree:", sorted(e for e, bit in c.items() if bit))

cover = double_cover(g, rot, c)
print("cover has", len(cover.graph), "vertices in", len(connected_components(cover.graph)), "components")
print("projection is a local isomorphism:", is_local_isomorphism(g, cover))
print("lifted rotation agrees everywhere:", all(not any(cc.values()) for cc in component_cocycles(cover)))
