"""Finite approximations of ends of lazily presented infinite graphs.

At radius ``r`` an end is approximated by a component of ``T \\ B_{r-1}``
that reaches the outer sphere of the truncation ``T = B_R`` with
``R = r + margin``: the vertices at distance at least ``r`` that still lead
all the way out.  A component that dies between ``R`` and infinity is the
proxy's failure mode; deeper truncations expose it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import min_edge_cut, vertex_disjoint_paths_between
from .graph import Graph, GraphError, components_within
from .lazy import Ball, LazyGraph, ball
from .separations import Separation, sides


class NotInInterior(GraphError):
    pass


@dataclass(frozen=True)
class EndApprox:
    radius: int
    margin: int
    cid: int  # least vertex of the component
    vertices: frozenset[int] = field(repr=False)
    outer: frozenset[int] = field(repr=False)
    truncation: Ball = field(compare=False, repr=False)

    @property
    def outer_radius(self) -> int:
        return self.radius + self.margin


def _annulus_components(trunc: Ball, r: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    keep = {v for v, d in trunc.dist.items() if d >= r}
    sphere = trunc.sphere
    out = []
    for comp in components_within(trunc.graph, keep):
        outer = comp & sphere
        if outer:
            out.append((comp, frozenset(outer)))
    return out


def end_spectrum(lazy: LazyGraph, r: int, margin: int = 2) -> list[EndApprox]:
    """End approximations at radius ``r`` around the basepoint, ordered by
    component id."""
    if margin < 1:
        raise ValueError("margin must be at least 1")
    if r < 1:
        raise ValueError("radius must be at least 1")
    trunc = ball(lazy, lazy.basepoint, r + margin)
    out = [EndApprox(r, margin, min(c), c, o, trunc) for c, o in _annulus_components(trunc, r)]
    return sorted(out, key=lambda e: e.cid)


def refinement(lazy: LazyGraph, r: int, margin: int = 2) -> dict[int, int]:
    """Map each radius-``r+1`` approximation to the radius-``r`` one it
    lies in (ids of both); raises if one deeper component meets two."""
    deep = end_spectrum(lazy, r + 1, margin)
    shallow = end_spectrum(lazy, r, margin)
    out = {}
    for e in deep:
        hits = [s.cid for s in shallow if s.vertices & e.vertices]
        if len(hits) != 1:
            raise GraphError(f"approximation {e.cid} at radius {r + 1} meets {len(hits)} at radius {r}")
        out[e.cid] = hits[0]
    return out


def separates_end_pair(sep: Separation, e1: EndApprox, e2: EndApprox) -> bool:
    """The two approximated ends lie on different sides of ``sep``.

    ``sep`` is a separation of the truncation graph whose adhesion set and
    cut lie strictly inside radius ``r``.
    """
    if e1.radius != e2.radius or e1.truncation.graph != e2.truncation.graph:
        raise ValueError("end approximations must share radius and truncation")
    trunc = e1.truncation
    inner = trunc.within(e1.radius - 1)
    touched = set(sep.S) | {v for e in sep.B for v in e}
    if not touched <= inner:
        raise NotInInterior("separation is not inside the truncation interior")
    if e1 == e2:
        return False
    sp = sides(trunc.graph, sep)
    in_first = [e.vertices <= sp.A1 - sep.S for e in (e1, e2)]
    return in_first[0] != in_first[1]


@dataclass(frozen=True)
class CutReport:
    radius: int
    value: int | None
    cut: frozenset | None
    merged: bool


def _locate(lazy: LazyGraph, e: EndApprox, R: int) -> tuple[Ball, frozenset[int], frozenset[int]] | None:
    if R < e.radius:
        raise ValueError("truncation radius must be at least the approximation radius")
    trunc = ball(lazy, lazy.basepoint, R)
    for comp, outer in _annulus_components(trunc, e.radius):
        if e.cid in comp:
            return trunc, comp, outer
    return None


def accessibility_cut(lazy: LazyGraph, e1: EndApprox, e2: EndApprox, R: int, vertex: bool = False) -> CutReport:
    """Minimum edge cut (or vertex cut with ``vertex=True``) between the
    outer vertices of the two approximations inside the truncation ``B_R``.

    ``merged`` is set, with no value, when both approximations fall in one
    component at radius ``R``.
    """
    if e1 == e2:
        raise ValueError("need two distinct end approximations")
    a, b = _locate(lazy, e1, R), _locate(lazy, e2, R)
    if a is None or b is None:
        return CutReport(R, None, None, False)
    trunc = a[0]
    if a[1] == b[1]:
        return CutReport(R, None, None, True)
    if vertex:
        paths = vertex_disjoint_paths_between(trunc.graph, a[2], b[2])
        return CutReport(R, len(paths), None, False)
    value, cut = min_edge_cut(trunc.graph, a[2], b[2])
    return CutReport(R, value, cut, False)


def thick_end_estimate(lazy: LazyGraph, e: EndApprox, m: int, R: int) -> bool:
    """At least ``m`` vertex-disjoint paths inside the approximation's
    component, from its inner sphere (distance ``r``) to its outer sphere
    (distance ``R``)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if R <= e.radius:
        raise ValueError("truncation radius must exceed the approximation radius")
    found = _locate(lazy, e, R)
    if found is None:
        return False
    trunc, comp, outer = found
    inner = frozenset(v for v in comp if trunc.dist[v] == e.radius)
    sub = trunc.graph.induced(comp)
    return len(vertex_disjoint_paths_between(sub, inner, outer, limit=m)) >= m


def end_count_profile(lazy: LazyGraph, radii: range, margin: int = 2) -> dict[int, int]:
    return {r: len(end_spectrum(lazy, r, margin)) for r in radii}


def truncation_graph(lazy: LazyGraph, R: int) -> Graph:
    return ball(lazy, lazy.basepoint, R).graph
