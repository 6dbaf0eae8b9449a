"""Finite simple undirected graphs over non-negative integer vertex ids."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class GraphError(ValueError):
    pass


class UnknownVertex(GraphError, KeyError):
    pass


class Graph:
    """Immutable finite simple graph.

    Vertices are non-negative integers; edges are stored as ``(min, max)``
    pairs.  Isolated vertices are allowed.
    """

    __slots__ = ("_adj", "_vertices", "_edges", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise GraphError(f"vertex ids must be non-negative integers, got {v!r}")
            adj.setdefault(v, set())
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            for w in (u, v):
                if not isinstance(w, int) or w < 0:
                    raise GraphError(f"vertex ids must be non-negative integers, got {w!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
            es.add(edge(u, v))
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._vertices = tuple(sorted(self._adj))
        self._edges = frozenset(es)
        self._hash = None

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_adjacency(cls, adj: Mapping[int, Iterable[int]]) -> "Graph":
        return cls(adj, ((u, v) for u, ns in adj.items() for v in ns))

    # -- basic accessors --------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self._vertices)}, |E|={len(self._edges)})"

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def number_of_edges(self) -> int:
        return len(self._edges)

    # -- derived graphs ---------------------------------------------------

    def induced(self, vs: Iterable[int]) -> "Graph":
        """``G[A]``."""
        keep = set(vs)
        missing = keep - self._adj.keys()
        if missing:
            raise UnknownVertex(min(missing))
        return Graph(keep, ((u, v) for (u, v) in self._edges if u in keep and v in keep))

    def remove_vertices(self, vs: Iterable[int]) -> "Graph":
        """``G \\ A``."""
        drop = set(vs)
        return self.induced(v for v in self._vertices if v not in drop)

    def remove_edges(self, es: Iterable[tuple[int, int]]) -> "Graph":
        """``G \\ B``: same vertex set, fewer edges."""
        drop = {edge(u, v) for u, v in es}
        return Graph(self._vertices, (e for e in self._edges if e not in drop))

    def boundary(self, vs: Iterable[int]) -> frozenset[Edge]:
        """Edges with exactly one endpoint in ``vs``."""
        inside = set(vs)
        return frozenset(
            edge(u, w) for u in inside for w in self._adj.get(u, ()) if w not in inside
        )

    # -- traversal --------------------------------------------------------

    def bfs_distances(self, source: int, limit: int | None = None) -> dict[int, int]:
        if source not in self._adj:
            raise UnknownVertex(source)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if limit is not None and dist[u] >= limit:
                continue
            for w in sorted(self._adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def component_of(self, v: int, within: set[int] | frozenset[int] | None = None) -> set[int]:
        """Vertex set of the component of ``v`` (optionally inside ``within``)."""
        if v not in self._adj:
            raise UnknownVertex(v)
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen and (within is None or w in within):
                    seen.add(w)
                    stack.append(w)
        return seen

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        return len(self.component_of(self._vertices[0])) == len(self._vertices)

    def shortest_path(self, u: int, v: int, avoid: Iterable[int] = (), banned_edges: Iterable[Edge] = ()) -> list[int] | None:
        """Lexicographically least shortest ``u``-``v`` path, or ``None``.

        ``avoid`` vertices (other than the endpoints) and ``banned_edges`` are
        not used.
        """
        avoid_set = set(avoid) - {u, v}
        banned = {edge(*e) for e in banned_edges}
        if u not in self._adj or v not in self._adj:
            raise UnknownVertex(u if u not in self._adj else v)
        # distances from the target, then greedy smallest-neighbour descent
        dist = {v: 0}
        queue = deque([v])
        while queue:
            a = queue.popleft()
            if a == u:
                break
            for b in self._adj[a]:
                if b in dist or b in avoid_set or edge(a, b) in banned:
                    continue
                dist[b] = dist[a] + 1
                queue.append(b)
        if u not in dist:
            return None
        path = [u]
        cur = u
        while cur != v:
            cur = min(
                w for w in self._adj[cur]
                if dist.get(w) == dist[cur] - 1 and edge(cur, w) not in banned
            )
            path.append(cur)
        return path


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex classes of the components, ordered by least vertex."""
    seen: set[int] = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = g.component_of(v)
        seen |= comp
        out.append(frozenset(comp))
    return out


def components_within(g: Graph, keep: Iterable[int]) -> list[frozenset[int]]:
    """Components of ``G[keep]`` without building the induced graph."""
    keep_set = set(keep)
    seen: set[int] = set()
    out = []
    for v in sorted(keep_set):
        if v in seen:
            continue
        comp = g.component_of(v, within=keep_set)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_forest(g: Graph) -> bool:
    return g.number_of_edges() == len(g) - len(connected_components(g))


def relabel(g: Graph, mapping: Mapping[int, int]) -> Graph:
    return Graph((mapping[v] for v in g.vertices), ((mapping[u], mapping[v]) for u, v in g.edges))


# -- small named graphs used throughout tests and demos ---------------------

def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(range(a + b), ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    """Centre 0 with leaves 1..leaves."""
    return Graph(range(leaves + 1), ((0, i) for i in range(1, leaves + 1)))


def k4_minus_edge() -> Graph:
    """Two triangles sharing the edge (0, 1); apexes 2 and 3."""
    return Graph(range(4), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


def cube_graph() -> Graph:
    """The 3-cube Q3 on ids 0..7 (bit-flip adjacency)."""
    return Graph(range(8), ((v, v ^ (1 << b)) for v in range(8) for b in range(3)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def wheel_graph(rim: int) -> Graph:
    """Hub 0, rim 1..rim."""
    es = [(0, i) for i in range(1, rim + 1)]
    es += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(range(rim + 1), es)


def prism_graph(n: int) -> Graph:
    """``C_n`` x ``K_2``."""
    es = [(i, (i + 1) % n) for i in range(n)]
    es += [(n + i, n + (i + 1) % n) for i in range(n)]
    es += [(i, n + i) for i in range(n)]
    return Graph(range(2 * n), es)


def octahedron_graph() -> Graph:
    return Graph(range(6), ((i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3))


def grid_graph(rows: int, cols: int) -> Graph:
    es = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                es.append((v, v + 1))
            if r + 1 < rows:
                es.append((v, v + cols))
    return Graph(range(rows * cols), es)
