"""Separations ``(S, B)``: an adhesion vertex set plus a cut ``B`` of boundary
edges closed under "same component of ``G \\ S``".

A separation is a plain value; operations that need the ambient graph take
it as their first argument.  The boundary ``dS`` is carried along (outside
equality) so that :func:`complement` does not need the graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable

from .graph import Edge, Graph, GraphError, components_within, edge


class InvalidSeparation(GraphError):
    def __init__(self, message: str, violating_edge: Edge | None = None):
        super().__init__(message)
        self.edge = violating_edge


@dataclass(frozen=True)
class Separation:
    S: frozenset[int]
    B: frozenset[Edge]
    dS: frozenset[Edge] | None = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.S)

    def key(self) -> tuple[tuple[int, ...], tuple[Edge, ...]]:
        return tuple(sorted(self.S)), tuple(sorted(self.B))

    def __lt__(self, other: "Separation") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        return format_separation(self)


@dataclass(frozen=True)
class SidePair:
    A1: frozenset[int]
    A2: frozenset[int]
    E1: frozenset[Edge]
    E2: frozenset[Edge]

    def swap(self) -> "SidePair":
        return SidePair(self.A2, self.A1, self.E2, self.E1)


def _norm_edges(es: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    return frozenset(edge(u, v) for u, v in es)


def _outer(S: frozenset[int], e: Edge) -> int:
    return e[1] if e[0] in S else e[0]


def validate_separation(g: Graph, S: Iterable[int], B: Iterable[tuple[int, int]]) -> Separation:
    """Return the separation ``(S, B)`` of ``g`` or raise :class:`InvalidSeparation`.

    The closure rule: once one edge from ``S`` into a component of ``G \\ S``
    is cut, every edge from ``S`` into that component is cut.
    """
    S = frozenset(S)
    B = _norm_edges(B)
    if not S:
        raise InvalidSeparation("adhesion set must be non-empty")
    for v in S:
        if v not in g:
            raise InvalidSeparation(f"vertex {v} is not in the graph")
    first = min(S)
    if not S <= g.component_of(first):
        raise InvalidSeparation("adhesion set spans several components")
    dS = g.boundary(S)
    extra = B - dS
    if extra:
        bad = min(extra)
        raise InvalidSeparation(f"edge {bad} is not in the boundary of S", bad)
    comp = _component_index(g, S)
    cut_comps = {comp[_outer(S, e)] for e in B}
    for e in sorted(dS - B):
        if comp[_outer(S, e)] in cut_comps:
            raise InvalidSeparation(f"edge {e} must belong to B (closure rule)", e)
    return Separation(S, B, dS)


def is_separation(g: Graph, S: Iterable[int], B: Iterable[tuple[int, int]]) -> bool:
    try:
        validate_separation(g, S, B)
    except InvalidSeparation:
        return False
    return True


def make(g: Graph, S: Iterable[int], B: Iterable[tuple[int, int]]) -> Separation:
    return validate_separation(g, S, B)


@lru_cache(maxsize=1 << 14)
def _component_index(g: Graph, S: frozenset[int]) -> dict[int, int]:
    rest = set(g.vertices) - S
    index = {}
    for i, comp in enumerate(components_within(g, rest)):
        for v in comp:
            index[v] = i
    return index


def complement(sep: Separation, g: Graph | None = None) -> Separation:
    """``(S, B)^- = (S, dS \\ B)``."""
    dS = sep.dS
    if dS is None:
        if g is None:
            raise ValueError("separation carries no boundary; pass the graph")
        dS = g.boundary(sep.S)
    return Separation(sep.S, dS - sep.B, dS)


def with_boundary(g: Graph, sep: Separation) -> Separation:
    if sep.dS is not None:
        return sep
    return Separation(sep.S, sep.B, g.boundary(sep.S))


@lru_cache(maxsize=1 << 16)
def sides(g: Graph, sep: Separation) -> SidePair:
    """``(A1, A2) = (G[S u C'], G[V \\ C'])`` with ``C'`` the components of
    ``G \\ S`` entered by the cut."""
    S = sep.S
    comp = _component_index(g, S)
    chosen = {comp[_outer(S, e)] for e in sep.B}
    cbar = frozenset(v for v, c in comp.items() if c in chosen)
    a1 = S | cbar
    a2 = frozenset(g.vertices) - cbar
    e1 = frozenset(e for e in g.edges if e[0] in a1 and e[1] in a1)
    e2 = frozenset(e for e in g.edges if e[0] in a2 and e[1] in a2)
    return SidePair(a1, a2, e1, e2)


def is_proper(g: Graph, sep: Separation) -> bool:
    """``G \\ S`` disconnected and ``B`` a non-empty proper subset of ``dS``."""
    dS = sep.dS if sep.dS is not None else g.boundary(sep.S)
    if not sep.B or sep.B == dS:
        return False
    return len(set(_component_index(g, sep.S).values())) > 1


def leq(g: Graph, s1: Separation, s2: Separation) -> bool:
    """``s1 <= s2``: ``A1 within A1'`` and ``A2' within A2`` (non-strict,
    compared on vertex and edge sets)."""
    p, q = sides(g, s1), sides(g, s2)
    return p.A1 <= q.A1 and q.A2 <= p.A2 and p.E1 <= q.E1 and q.E2 <= p.E2


def lt(g: Graph, s1: Separation, s2: Separation) -> bool:
    return s1 != s2 and leq(g, s1, s2)


def nested(g: Graph, s1: Separation, s2: Separation) -> bool:
    """``s1`` is comparable with ``s2`` or with ``s2^-``."""
    s2c = complement(with_boundary(g, s2))
    return leq(g, s1, s2) or leq(g, s2, s1) or leq(g, s1, s2c) or leq(g, s2c, s1)


def enumerate_separations(g: Graph, max_order: int) -> list[Separation]:
    """All separations with ``1 <= |S| <= max_order``, canonically ordered.

    For each adhesion set, a separation is a choice of components of
    ``G \\ S``; ``B`` is the set of edges from ``S`` into the chosen ones.
    """
    out = []
    verts = g.vertices
    for k in range(1, max_order + 1):
        for S in combinations(verts, k):
            S = frozenset(S)
            if not S <= g.component_of(min(S)):
                continue
            dS = g.boundary(S)
            comp = _component_index(g, S)
            groups: dict[int, set[Edge]] = {}
            for e in dS:
                groups.setdefault(comp[_outer(S, e)], set()).add(e)
            keys = sorted(groups)
            for mask in product((False, True), repeat=len(keys)):
                B = frozenset(e for c, on in zip(keys, mask) if on for e in groups[c])
                out.append(Separation(S, B, dS))
    out.sort()
    return out


def proper_separations(g: Graph, max_order: int) -> list[Separation]:
    return [s for s in enumerate_separations(g, max_order) if is_proper(g, s)]


def from_vertex_partition(g: Graph, U1: Iterable[int], U2: Iterable[int]) -> Separation:
    """``(S, B) = (U1 n U2, dS n E(G[U1]))`` for a cover ``G = G[U1] u G[U2]``."""
    U1, U2 = frozenset(U1), frozenset(U2)
    if U1 | U2 != frozenset(g.vertices):
        raise InvalidSeparation("U1 and U2 do not cover the vertex set")
    for u, v in sorted(g.edges):
        if not ({u, v} <= U1 or {u, v} <= U2):
            raise InvalidSeparation(f"edge {(u, v)} lies in neither G[U1] nor G[U2]", (u, v))
    S = U1 & U2
    dS = g.boundary(S)
    B = frozenset(e for e in dS if e[0] in U1 and e[1] in U1)
    return validate_separation(g, S, B)


# -- text form ---------------------------------------------------------------

def format_separation(sep: Separation) -> str:
    S, B = sep.key()
    return "S: " + ",".join(map(str, S)) + " | B: " + ",".join(f"({u},{v})" for u, v in B)


_SEP_RE = re.compile(r"^\s*S:\s*(?P<S>[\d,\s]*)\|\s*B:\s*(?P<B>.*)$")
_EDGE_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_separation(line: str, g: Graph | None = None) -> Separation:
    m = _SEP_RE.match(line)
    if not m:
        raise ValueError(f"malformed separation line: {line!r}")
    S = [int(t) for t in m.group("S").replace(",", " ").split()]
    rest = _EDGE_RE.sub("", m.group("B")).replace(",", "").strip()
    if rest:
        raise ValueError(f"malformed cut in separation line: {line!r}")
    B = [(int(a), int(b)) for a, b in _EDGE_RE.findall(m.group("B"))]
    if g is not None:
        return validate_separation(g, S, B)
    return Separation(frozenset(S), _norm_edges(B))
