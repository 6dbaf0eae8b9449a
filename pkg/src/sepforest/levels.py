"""The level space of a tree decomposition and the treeing-glue algorithm.

A level point ``(x, t)`` is a base vertex together with a decomposition
node whose bag holds it; the points with the same ``t`` form a level.
Spanning trees of the levels, joined by one chosen cross-level edge per
decomposition edge, give a spanning tree of the whole space; pushing that
tree down to one lift per base vertex gives a treeing of the base graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .connectivity import MinorReport, verify_minor_model
from .graph import Edge, Graph, GraphError, connected_components, edge, is_forest
from .separations import Separation, sides
from .treedecomp import TreeDecomposition, edge_separations, validate_tree_decomposition

Point = tuple[int, int]


@dataclass(frozen=True, eq=False)
class LevelSpace:
    td: TreeDecomposition
    points: tuple[Point, ...]  # sorted by (t, x)
    index: dict[Point, int] = field(repr=False)

    @property
    def base(self) -> Graph:
        return self.td.base

    def point(self, pid: int) -> Point:
        return self.points[pid]

    def p(self, pid: int) -> int:
        """Projection to the base vertex."""
        return self.points[pid][0]

    def level(self, pid: int) -> int:
        return self.points[pid][1]

    def level_points(self, t: int) -> list[int]:
        return [self.index[(x, t)] for x in sorted(self.td.bags[t])]

    def empty_graph(self) -> Graph:
        return Graph(range(len(self.points)))


def level_space(g: Graph, td: TreeDecomposition) -> LevelSpace:
    report = validate_tree_decomposition(g, td)
    if not report.ok:
        raise GraphError("invalid tree decomposition: " + "; ".join(report.problems))
    pts = tuple(sorted(((x, t) for t in td.nodes for x in td.bags[t]), key=lambda pt: (pt[1], pt[0])))
    return LevelSpace(td, pts, {pt: i for i, pt in enumerate(pts)})


def format_point(pt: Point) -> str:
    return f"({pt[0]},{pt[1]})"


def levels_graph_L(z: LevelSpace) -> Graph:
    """``(x, t) ~ (y, t)`` when ``xy`` is a base edge."""
    g = z.base
    es = []
    for t in z.td.nodes:
        for x, y in combinations(sorted(z.td.bags[t]), 2):
            if g.has_edge(x, y):
                es.append((z.index[(x, t)], z.index[(y, t)]))
    return Graph(range(len(z.points)), es)


def torso_augmentation_A(z: LevelSpace) -> frozenset[Edge]:
    """``(x, t) ~ (y, t)`` for non-adjacent ``x, y`` that share another bag."""
    g = z.base
    td = z.td
    out = set()
    for t in td.nodes:
        for x, y in combinations(sorted(td.bags[t]), 2):
            if g.has_edge(x, y):
                continue
            if any(u != t and x in td.bags[u] and y in td.bags[u] for u in td.nodes):
                out.add(edge(z.index[(x, t)], z.index[(y, t)]))
    return frozenset(out)


# -- alpha pieces ------------------------------------------------------------------

@dataclass(frozen=True)
class AlphaPieces:
    sep: Separation
    pieces: tuple[tuple[int, frozenset[int]], ...]  # (s, piece) in id order of s

    def of(self, s: int) -> frozenset[int]:
        return dict(self.pieces)[s]


def alpha_pieces(g: Graph, sep: Separation) -> AlphaPieces:
    """Split the ``A2`` side into one connected piece per adhesion vertex.

    Going through ``S`` in id order, the piece of ``s_i`` is its component
    in ``A2`` after removing the earlier pieces and withholding the later
    adhesion vertices.
    """
    a2 = set(sides(g, sep).A2)
    order = sorted(sep.S)
    taken: set[int] = set()
    out = []
    for i, s in enumerate(order):
        allowed = a2 - taken - set(order[i + 1:])
        piece = frozenset(g.component_of(s, within=allowed))
        taken |= piece
        out.append((s, piece))
    if taken != a2:
        raise GraphError(f"pieces of {sep} do not cover its side")
    return AlphaPieces(sep, tuple(out))


def node_separations(td: TreeDecomposition, t: int) -> list[Separation]:
    """Separations at the edges of node ``t``, oriented with ``t``'s bag on
    the ``A1`` side (the class of ``t`` for a decomposition built from a
    system)."""
    out = []
    for u in sorted(td.tree.neighbors(t)):
        pair = edge_separations(td, t, u)
        if pair is not None:
            out.append(pair[0])
    return out


def point_alphas(z: LevelSpace) -> dict[int, frozenset[int]]:
    """``alpha_(x,t)``: ``x`` together with its pieces for the separations
    of ``t`` whose adhesion set holds ``x``."""
    g = z.base
    out = {}
    for t in z.td.nodes:
        seps = node_separations(z.td, t)
        pieces = [alpha_pieces(g, s) for s in seps]
        for x in sorted(z.td.bags[t]):
            alpha = {x}
            for ap, s in zip(pieces, seps):
                if x in s.S:
                    alpha |= ap.of(x)
            out[z.index[(x, t)]] = frozenset(alpha)
    return out


def _least_edge_between(g: Graph, a: frozenset[int], b: frozenset[int]) -> Edge | None:
    best = None
    for u in a:
        for w in g.neighbors(u):
            if w in b:
                e = edge(u, w)
                if best is None or e < best:
                    best = e
    return best


def minor_augmentation_A(z: LevelSpace, alphas: Mapping[int, frozenset[int]] | None = None) -> frozenset[Edge]:
    """``(x, t) ~ (y, t)`` when a separation of ``t`` holds both ``x`` and
    ``y`` and a base edge joins ``alpha_(x,t)`` to ``alpha_(y,t)``."""
    g = z.base
    alphas = point_alphas(z) if alphas is None else alphas
    out = set()
    for t in z.td.nodes:
        for sep in node_separations(z.td, t):
            for x, y in combinations(sorted(sep.S), 2):
                i, j = z.index[(x, t)], z.index[(y, t)]
                if _least_edge_between(g, alphas[i], alphas[j]) is not None:
                    out.add(edge(i, j))
    return frozenset(out)


def minor_models(z: LevelSpace, aug: Iterable[Edge], alphas: Mapping[int, frozenset[int]] | None = None) -> list[tuple[Graph, MinorReport]]:
    """For each component of ``L u aug``, its minor model in the base graph
    (branch sets ``alpha``) and the verification report."""
    g = z.base
    alphas = point_alphas(z) if alphas is None else alphas
    L = levels_graph_L(z)
    whole = Graph(range(len(z.points)), list(L.edges) + list(aug))
    out = []
    for comp in connected_components(whole):
        h = whole.induced(comp)
        branch = {i: alphas[i] for i in comp}
        emap = {}
        for i, j in h.sorted_edges():
            x, y = z.p(i), z.p(j)
            emap[(i, j)] = (x, y) if g.has_edge(x, y) else _least_edge_between(g, branch[i], branch[j])
        out.append((h, verify_minor_model(g, h, branch, emap)))
    return out


# -- gluing -----------------------------------------------------------------------------

def W_edges(z: LevelSpace) -> frozenset[Edge]:
    """``(x, t) ~ (x, t')`` across each decomposition edge ``tt'``."""
    out = set()
    for t, u in z.td.tree.sorted_edges():
        for x in z.td.bags[t] & z.td.bags[u]:
            out.add(edge(z.index[(x, t)], z.index[(x, u)]))
    return frozenset(out)


def level_forests(z: LevelSpace, extra: Iterable[Edge] | None = None) -> dict[int, Graph]:
    """Breadth-first spanning trees of each level on ``L`` plus ``extra``
    (default: the torso augmentation), rooted at the least point."""
    extra = torso_augmentation_A(z) if extra is None else extra
    L = levels_graph_L(z)
    whole = Graph(range(len(z.points)), list(L.edges) + list(extra))
    out = {}
    for t in z.td.nodes:
        pts = z.level_points(t)
        allowed = set(pts)
        seen = set()
        es = []
        for root in pts:
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                a = queue.popleft()
                for b in sorted(whole.neighbors(a)):
                    if b in allowed and b not in seen:
                        seen.add(b)
                        es.append((a, b))
                        queue.append(b)
        out[t] = Graph(pts, es)
    return out


def glue_treeing(z: LevelSpace, forests: Mapping[int, Graph], W: Iterable[Edge] | None = None) -> Graph:
    """Level spanning trees plus, for each decomposition edge, the ``W``
    edge at the least shared base vertex."""
    W = W_edges(z) if W is None else frozenset(W)
    es: list[Edge] = []
    for t in z.td.nodes:
        f = forests.get(t)
        pts = set(z.level_points(t))
        if f is None or set(f.vertices) != pts:
            raise GraphError(f"no spanning forest for level {t}")
        if not is_forest(f) or not f.is_connected():
            raise GraphError(f"forest of level {t} is not a spanning tree of the level")
        es.extend(f.edges)
    for t, u in z.td.tree.sorted_edges():
        shared = sorted(z.td.bags[t] & z.td.bags[u])
        if not shared:
            raise GraphError(f"decomposition edge {(t, u)} has an empty adhesion set")
        w = edge(z.index[(shared[0], t)], z.index[(shared[0], u)])
        if w not in W:
            raise GraphError(f"W lacks the edge {w}")
        es.append(w)
    return Graph(range(len(z.points)), es)


def section(z: LevelSpace) -> dict[int, int]:
    """Base vertex -> its lift with the least decomposition node."""
    out: dict[int, int] = {}
    for pid, (x, t) in enumerate(z.points):
        if x not in out or t < z.level(out[x]):
            out[x] = pid
    return out


def project_treeing(tree: Graph, z: LevelSpace) -> Graph:
    """Push a spanning tree of the level space down to the base vertices.

    Each component is rooted at its least section point; every other
    section point is joined to its nearest section ancestor, which keeps
    the result a tree on the section, and the section maps injectively to
    the base.
    """
    if not is_forest(tree):
        raise GraphError("tree on the level space has a cycle")
    sec = section(z)
    marked = {pid: x for x, pid in sec.items()}
    es = []
    for comp in connected_components(tree):
        roots = sorted(pid for pid in comp if pid in marked)
        if not roots:
            continue
        root = roots[0]
        nearest = {root: root}
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in sorted(tree.neighbors(a)):
                if b in nearest:
                    continue
                nearest[b] = b if b in marked else nearest[a]
                if b in marked:
                    es.append((marked[nearest[a]], marked[b]))
                queue.append(b)
    out = Graph(z.base.vertices, es)
    base_comps = {frozenset(c) for c in connected_components(z.base)}
    if {frozenset(c) for c in connected_components(out)} != base_comps:
        raise GraphError("projected treeing does not span the base components")
    return out


def glue_pipeline(g: Graph, td: TreeDecomposition, minor: bool = False) -> tuple[LevelSpace, Graph, Graph]:
    """Level space, glued tree on it, and its projection to ``g``."""
    z = level_space(g, td)
    aug = minor_augmentation_A(z) if minor else torso_augmentation_A(z)
    forests = level_forests(z, aug)
    tree = glue_treeing(z, forests)
    return z, tree, project_treeing(tree, z)
