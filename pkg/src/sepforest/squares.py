"""Separations of the scaled-squares graph used as worked examples.

The graph is ``C4 x Z``: the ring at scale ``n`` holds the four points
``(+-2^n, +-2^n)``.  All constructions here live in a truncation around
``(1, 1)`` and are only built when they fit strictly inside it.
"""

from __future__ import annotations

from .graph import Graph, GraphError
from .lazy import Ball, ball, scaled_squares, square_id, square_id_from_coords
from .separations import Separation, validate_separation

# quadrant bits: 1 = x negative, 2 = y negative
NE, NW, SE, SW = 0, 1, 2, 3


def truncation(radius: int) -> Ball:
    lazy = scaled_squares()
    return ball(lazy, lazy.basepoint, radius)


def point(x: float, y: float) -> int:
    return square_id_from_coords(x, y)


def ring(n: int) -> frozenset[int]:
    return frozenset(square_id(n, q) for q in range(4))


def _check_inside(trunc: Ball, vs) -> None:
    for v in vs:
        if trunc.dist.get(v, trunc.radius + 1) >= trunc.radius:
            raise GraphError(f"vertex {v} is not strictly inside the truncation")


def ring_separation(trunc: Ball, n: int) -> Separation:
    """``S`` = ring ``n``, ``B`` = its four edges toward scale ``n + 1``."""
    S = ring(n)
    _check_inside(trunc, S)
    B = [(square_id(n, q), square_id(n + 1, q)) for q in range(4)]
    return validate_separation(trunc.graph, S, B)


def chain_cycle(n: int) -> frozenset[int]:
    """Vertex set of the cycle ``C_n``: the scale-1 points except SW, the
    scale ``-n`` points except SW, and the SE and NW columns between."""
    if n < 1:
        raise ValueError("chain index starts at 1")
    vs = {square_id(1, NE), square_id(1, SE), square_id(1, NW)}
    vs |= {square_id(-n, NE), square_id(-n, SE), square_id(-n, NW)}
    for k in range(-n, 2):
        vs.add(square_id(k, SE))
        vs.add(square_id(k, NW))
    return frozenset(vs)


def chain_separation(trunc: Ball, n: int) -> Separation:
    """``(S_n, B_n)``: ``S_n`` the cycle above, ``B_n`` its edges pointing
    away from the inside region (the side holding ``(1, 1)``)."""
    S = chain_cycle(n)
    _check_inside(trunc, S)
    g: Graph = trunc.graph
    inside = g.component_of(point(1, 1), within=set(g.vertices) - S)
    B = [e for e in g.boundary(S) if not (set(e) & inside)]
    return validate_separation(g, S, B)


def chain_members(trunc: Ball) -> list[Separation]:
    """All chain separations that fit strictly inside the truncation."""
    out = []
    n = 1
    while all(trunc.dist.get(v, trunc.radius) < trunc.radius for v in chain_cycle(n)):
        out.append(chain_separation(trunc, n))
        n += 1
    return out


def ring_members(trunc: Ball) -> list[Separation]:
    """Ring separations whose ring and cut both lie strictly inside the
    truncation, in increasing scale."""
    out = []
    for n in range(-trunc.radius - 1, trunc.radius + 1):
        if all(trunc.dist.get(v, trunc.radius) < trunc.radius - 1 for v in ring(n)):
            out.append(ring_separation(trunc, n))
    return out
