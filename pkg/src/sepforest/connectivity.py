"""Menger-type connectivity via unit-capacity augmenting paths, and
verification of minor models."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .graph import Edge, Graph, GraphError, UnknownVertex, edge


class DisconnectedGraph(GraphError):
    pass


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    kind: str = "path"  # path | cycle | ray-prefix
    radius: int | None = None  # certified radius, ray prefixes only

    def edges(self) -> list[Edge]:
        vs = self.vertices
        es = [edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.kind == "cycle" and len(vs) > 2:
            es.append(edge(vs[-1], vs[0]))
        return es

    def check(self, g: Graph) -> bool:
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            return False
        if self.kind == "cycle" and len(vs) < 3:
            return False
        if self.kind == "ray-prefix" and self.radius is None:
            return False
        return all(g.has_edge(u, v) for u, v in self.edges())


class _Flow:
    """Residual network with integer arc capacities."""

    def __init__(self) -> None:
        self.cap: dict[object, dict[object, int]] = {}
        self.orig: dict[tuple[object, object], int] = {}

    def add(self, a: object, b: object, c: int = 1) -> None:
        self.cap.setdefault(a, {})
        self.cap.setdefault(b, {})
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)
        self.orig[(a, b)] = self.orig.get((a, b), 0) + c

    def _augment(self, s: object, t: object) -> bool:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            a = queue.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if t not in parent:
            return False
        b = t
        while parent[b] is not None:
            a = parent[b]
            self.cap[a][b] -= 1
            self.cap[b][a] += 1
            b = a
        return True

    def run(self, s: object, t: object, limit: int | None = None) -> int:
        value = 0
        while (limit is None or value < limit) and self._augment(s, t):
            value += 1
        return value

    def reachable(self, s: object) -> set:
        seen = {s}
        stack = [s]
        while stack:
            a = stack.pop()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    stack.append(b)
        return seen

    def decompose(self, s: object, t: object) -> list[list[object]]:
        """Split the current flow into ``s``-``t`` arc paths."""
        flow: dict[object, dict[object, int]] = {}
        for (a, b), c in self.orig.items():
            f = c - self.cap[a][b]
            back = self.orig.get((b, a), 0) - self.cap[b][a] if (b, a) in self.orig else 0
            net = f - back if back > 0 else f
            if net > 0:
                flow.setdefault(a, {})[b] = net
        paths = []
        while flow.get(s):
            path = [s]
            cur = s
            seen = {s}
            while cur != t:
                nxt = min(flow[cur], key=repr)
                flow[cur][nxt] -= 1
                if not flow[cur][nxt]:
                    del flow[cur][nxt]
                if nxt in seen:  # drop a circulation
                    while path[-1] != nxt:
                        seen.discard(path.pop())
                    cur = nxt
                    continue
                path.append(nxt)
                seen.add(nxt)
                cur = nxt
            paths.append(path)
        return paths


_SRC, _SNK = ("src",), ("snk",)


def _split_network(g: Graph, sources: set[int], sinks: set[int], skip_edge: Edge | None = None) -> _Flow:
    # vertex v becomes ("i", v) -> ("o", v) with capacity 1; terminals uncapped
    net = _Flow()
    big = len(g) + 1
    for v in g.vertices:
        c = big if (v in sources or v in sinks) else 1
        net.add(("i", v), ("o", v), c)
    for u, v in g.edges:
        if skip_edge is not None and (u, v) == skip_edge:
            continue
        # edge arcs are uncapacitated so that minimum cuts are vertex cuts
        net.add(("o", u), ("i", v), big)
        net.add(("o", v), ("i", u), big)
    for s in sources:
        net.add(_SRC, ("i", s), big)
    for t in sinks:
        net.add(("o", t), _SNK, big)
    return net


def _trace_paths(net: _Flow) -> list[list[int]]:
    out = []
    for arcs in net.decompose(_SRC, _SNK):
        vs = [node[1] for node in arcs if isinstance(node, tuple) and node[0] == "i"]
        out.append(vs)
    return out


@dataclass(frozen=True)
class MengerResult:
    paths: tuple[PathWitness, ...]
    cut: frozenset[int] | None
    k: int

    @property
    def ok(self) -> bool:
        return len(self.paths) >= self.k


def internally_disjoint_paths(g: Graph, u: int, v: int, k: int) -> MengerResult:
    """Either ``k`` internally disjoint ``u``-``v`` paths or a small cut.

    The cut is only reported for non-adjacent ``u``, ``v``; for adjacent
    endpoints the direct edge counts as one path and no vertex cut exists.
    """
    if u == v:
        raise GraphError("endpoints must differ")
    for w in (u, v):
        if w not in g:
            raise UnknownVertex(w)
    adjacent = g.has_edge(u, v)
    paths: list[PathWitness] = [PathWitness((u, v))] if adjacent else []
    need = k - len(paths)
    net = _split_network(g, {u}, {v}, skip_edge=edge(u, v) if adjacent else None)
    flow = net.run(_SRC, _SNK, limit=max(need, 0))
    for p in _trace_paths(net):
        paths.append(PathWitness(tuple(p)))
    paths.sort(key=lambda p: (len(p.vertices), p.vertices))
    cut = None
    if len(paths) < k and not adjacent:
        side = net.reachable(_SRC)
        cut = frozenset(w for w in g.vertices if ("i", w) in side and ("o", w) not in side)
    assert flow + adjacent == len(paths)
    return MengerResult(tuple(paths), cut, k)


def local_connectivity(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint ``u``-``v`` paths."""
    adjacent = g.has_edge(u, v)
    net = _split_network(g, {u}, {v}, skip_edge=edge(u, v) if adjacent else None)
    lim = None if limit is None else max(limit - adjacent, 0)
    return net.run(_SRC, _SNK, limit=lim) + adjacent


def is_k_connected(g: Graph, k: int) -> bool:
    """``|V| > k`` and no fewer than ``k`` vertices disconnect ``g``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not g.is_connected():
        raise DisconnectedGraph("is_k_connected requires a connected graph")
    if len(g) <= k:
        return False
    # a cut of size < k misses one of any k vertices, and that vertex is
    # separated by the cut from some non-neighbour
    for u in g.vertices[:k]:
        for v in g.vertices:
            if v != u and not g.has_edge(u, v) and local_connectivity(g, u, v, limit=k) < k:
                return False
    return True


def vertex_disjoint_paths_between(g: Graph, sources: Iterable[int], sinks: Iterable[int], limit: int | None = None) -> list[list[int]]:
    """Maximum family of pairwise vertex-disjoint paths from ``sources`` to
    ``sinks`` (terminal sets are assumed disjoint)."""
    src, snk = set(sources), set(sinks)
    if src & snk:
        raise GraphError("source and sink sets must be disjoint")
    net = _Flow()
    for v in g.vertices:
        net.add(("i", v), ("o", v), 1)
    for a, b in g.edges:
        net.add(("o", a), ("i", b))
        net.add(("o", b), ("i", a))
    for s in src:
        net.add(_SRC, ("i", s))
    for t in snk:
        net.add(("o", t), _SNK)
    net.run(_SRC, _SNK, limit=limit)
    return _trace_paths(net)


def min_edge_cut(g: Graph, sources: Iterable[int], sinks: Iterable[int]) -> tuple[int, frozenset[Edge]]:
    """Minimum number of edges separating ``sources`` from ``sinks``, with a
    witness cut (the boundary of the residual source side)."""
    src, snk = set(sources), set(sinks)
    if src & snk:
        raise GraphError("source and sink sets must be disjoint")
    net = _Flow()
    big = g.number_of_edges() + 1
    for a, b in g.edges:
        net.add(a, b)
        net.add(b, a)
    for s in src:
        net.add(_SRC, s, big)
    for t in snk:
        net.add(t, _SNK, big)
    value = net.run(_SRC, _SNK)
    side = net.reachable(_SRC)
    cut = frozenset(e for e in g.edges if (e[0] in side) != (e[1] in side))
    return value, cut


# -- minors ------------------------------------------------------------------

@dataclass(frozen=True)
class MinorReport:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_minor_model(
    g: Graph,
    h: Graph,
    branch_sets: Mapping[int, Iterable[int]],
    edge_map: Mapping[tuple[int, int], tuple[int, int]],
) -> MinorReport:
    """Check that branch sets and an edge map witness ``h`` as a minor of ``g``.

    Branch sets are vertex sets; the branch subgraph is the subgraph they
    induce.  Returns a falsy report listing violations.
    """
    problems = []
    sets = {}
    for x in h.vertices:
        if x not in branch_sets:
            problems.append(f"no branch set for {x}")
            continue
        bs = frozenset(branch_sets[x])
        sets[x] = bs
        if not bs:
            problems.append(f"branch set of {x} is empty")
        elif not bs <= set(g.vertices):
            problems.append(f"branch set of {x} leaves the host graph")
        elif len(g.component_of(min(bs), within=bs)) != len(bs):
            problems.append(f"branch set of {x} is not connected")
    for x, y in combinations(sorted(sets), 2):
        if sets[x] & sets[y]:
            problems.append(f"branch sets of {x} and {y} intersect")
    images = {}
    for e in h.edges:
        img = edge_map.get(e) or edge_map.get((e[1], e[0]))
        if img is None:
            problems.append(f"no image for edge {e}")
            continue
        img = edge(*img)
        if not g.has_edge(*img):
            problems.append(f"image {img} of {e} is not an edge of the host")
            continue
        if img in images:
            problems.append(f"edges {images[img]} and {e} share the image {img}")
        images[img] = e
        for x, bs in sets.items():
            if img[0] in bs and img[1] in bs:
                problems.append(f"image {img} of {e} lies inside the branch set of {x}")
        a, b = e
        if a in sets and b in sets:
            if not ((img[0] in sets[a] and img[1] in sets[b]) or (img[1] in sets[a] and img[0] in sets[b])):
                problems.append(f"image {img} of {e} does not join the branch sets of {a} and {b}")
    return MinorReport(not problems, tuple(problems))
