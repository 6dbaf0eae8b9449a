"""Edge sets as integer bitsets and rank over GF(2)."""

from __future__ import annotations

from typing import Iterable

from .graph import Edge, Graph, connected_components, edge


class EdgeIndex:
    """Bit position for each edge of a graph (sorted edge order)."""

    def __init__(self, g: Graph):
        self.edges = g.sorted_edges()
        self.pos = {e: i for i, e in enumerate(self.edges)}

    def mask(self, es: Iterable[tuple[int, int]]) -> int:
        m = 0
        for u, v in es:
            m ^= 1 << self.pos[edge(u, v)]
        return m

    def unmask(self, m: int) -> frozenset[Edge]:
        return frozenset(e for i, e in enumerate(self.edges) if m >> i & 1)


def rank(vectors: Iterable[int]) -> int:
    """Rank of bit vectors over GF(2) (xor basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def in_span(vectors: Iterable[int], target: int) -> bool:
    vs = list(vectors)
    return rank(vs) == rank(vs + [target])


def cycle_space_dimension(g: Graph) -> int:
    return g.number_of_edges() - len(g) + len(connected_components(g))


def fundamental_cycles(g: Graph) -> list[frozenset[Edge]]:
    """One cycle per non-tree edge of a breadth-first spanning forest."""
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    tree = set()
    for root in g.vertices:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        order = [root]
        for a in order:
            for b in sorted(g.neighbors(a)):
                if b not in parent:
                    parent[b] = a
                    depth[b] = depth[a] + 1
                    tree.add(edge(a, b))
                    order.append(b)
    out = []
    for u, v in g.sorted_edges():
        if (u, v) in tree:
            continue
        es = {(u, v)}
        a, b = u, v
        while a != b:
            if depth[a] >= depth[b]:
                es.add(edge(a, parent[a]))
                a = parent[a]
            else:
                es.add(edge(b, parent[b]))
                b = parent[b]
        out.append(frozenset(es))
    return out


def is_cycle_edge_set(es: Iterable[Edge]) -> bool:
    """Edge set of a single cycle: connected, every vertex of degree 2."""
    es = list(es)
    if len(es) < 3:
        return False
    h = Graph((), es)
    return h.is_connected() and all(h.degree(v) == 2 for v in h.vertices)
