"""Infinite, locally finite graphs presented by a neighbour oracle.

Every access goes through radius-bounded truncations (:func:`ball`).  The
built-in generators encode their vertices (lattice points, tree words, ...)
as non-negative integers so the rest of the package can treat truncations
as ordinary :class:`~sepforest.graph.Graph` values.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, UnknownVertex


class OracleError(RuntimeError):
    """The neighbour oracle failed or broke its contract."""


@dataclass(frozen=True)
class LazyGraph:
    oracle: Callable[[int], list[int]] = field(compare=False)
    basepoint: int
    name: str = "custom"
    params: tuple = ()
    max_degree: int | None = None

    def neighbors(self, v: int) -> list[int]:
        try:
            ns = self.oracle(v)
        except Exception as exc:  # oracle is user code
            raise OracleError(f"oracle failed at vertex {v}: {exc}") from exc
        ns = sorted(ns)
        if self.max_degree is not None and len(ns) > self.max_degree:
            raise OracleError(f"vertex {v} has degree {len(ns)} > declared bound {self.max_degree}")
        return ns

    def __repr__(self) -> str:
        args = ",".join(map(str, self.params))
        return f"LazyGraph({self.name}({args}), base={self.basepoint})"


@dataclass(frozen=True)
class Ball:
    """A radius-``r`` ball together with its distance data."""

    graph: Graph
    center: int
    radius: int
    dist: dict = field(compare=False, repr=False)

    @property
    def sphere(self) -> frozenset[int]:
        return frozenset(v for v, d in self.dist.items() if d == self.radius)

    def layer(self, d: int) -> frozenset[int]:
        return frozenset(v for v, dv in self.dist.items() if dv == d)

    def within(self, d: int) -> frozenset[int]:
        return frozenset(v for v, dv in self.dist.items() if dv <= d)


def ball(g: Graph | LazyGraph, v: int, r: int) -> Ball:
    """Induced subgraph on vertices at distance at most ``r`` from ``v``."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    if isinstance(g, Graph):
        dist = g.bfs_distances(v, limit=r)
        return Ball(g.induced(dist), v, r, dist)

    dist = {v: 0}
    adj: dict[int, list[int]] = {}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        ns = g.neighbors(u)
        adj[u] = ns
        if dist[u] == r:
            continue
        for w in ns:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    edges = []
    for u, ns in adj.items():
        for w in ns:
            if w in dist:
                if u not in adj[w]:
                    raise OracleError(f"oracle not symmetric on edge ({u}, {w})")
                edges.append((u, w))
    return Ball(Graph(dist, edges), v, r, dist)


def from_graph(g: Graph, basepoint: int) -> LazyGraph:
    """View a finite graph through the lazy interface."""
    if basepoint not in g:
        raise UnknownVertex(basepoint)
    return LazyGraph(lambda v: list(g.neighbors(v)), basepoint, "finite", (len(g),))


# -- integer encodings -------------------------------------------------------

def zz(n: int) -> int:
    """Bijection Z -> N: 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ..."""
    return 2 * n - 1 if n > 0 else -2 * n


def unzz(k: int) -> int:
    return (k + 1) // 2 if k % 2 else -(k // 2)


def pair(a: int, b: int) -> int:
    """Cantor pairing N x N -> N."""
    return (a + b) * (a + b + 1) // 2 + b


def unpair(z: int) -> tuple[int, int]:
    w = int(((8 * z + 1) ** 0.5 - 1) // 2)
    while w * (w + 1) // 2 > z:
        w -= 1
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    b = z - w * (w + 1) // 2
    return w - b, b


# -- generators --------------------------------------------------------------

def biinfinite_path() -> LazyGraph:
    def nbrs(v: int) -> list[int]:
        n = unzz(v)
        return [zz(n - 1), zz(n + 1)]

    return LazyGraph(nbrs, zz(0), "biinfinite_path", (), 2)


def grid_id(x: int, y: int) -> int:
    return pair(zz(x), zz(y))


def grid_coords(v: int) -> tuple[int, int]:
    a, b = unpair(v)
    return unzz(a), unzz(b)


def grid2d() -> LazyGraph:
    def nbrs(v: int) -> list[int]:
        x, y = grid_coords(v)
        return [grid_id(x + 1, y), grid_id(x - 1, y), grid_id(x, y + 1), grid_id(x, y - 1)]

    return LazyGraph(nbrs, grid_id(0, 0), "grid2d", (), 4)


def ladder_id(x: int, side: int) -> int:
    return 2 * zz(x) + side


def ladder() -> LazyGraph:
    """Z x {0, 1}."""
    def nbrs(v: int) -> list[int]:
        k, side = divmod(v, 2)
        x = unzz(k)
        return [ladder_id(x - 1, side), ladder_id(x + 1, side), ladder_id(x, 1 - side)]

    return LazyGraph(nbrs, ladder_id(0, 0), "ladder", (), 3)


def regular_tree(d: int) -> LazyGraph:
    """The d-regular tree, numbered breadth-first from the root 0."""
    if d < 2:
        raise ValueError("regular_tree needs degree >= 2")

    def nbrs(v: int) -> list[int]:
        if v == 0:
            return list(range(1, d + 1))
        first_child = d + 1 + (v - 1) * (d - 1)
        children = list(range(first_child, first_child + d - 1))
        parent = 0 if v <= d else (v - d - 1) // (d - 1) + 1
        return [parent] + children

    return LazyGraph(nbrs, 0, "regular_tree", (d,), d)


# scaled squares: the four points (+-2^n, +-2^n), n in Z.  A point is encoded
# by its scale n and quadrant q (bit 0: x < 0, bit 1: y < 0).

def square_id(n: int, q: int) -> int:
    return 4 * zz(n) + q


def square_point(v: int) -> tuple[int, int]:
    k, q = divmod(v, 4)
    return unzz(k), q


def square_coords(v: int) -> tuple[float, float]:
    n, q = square_point(v)
    s = 2.0 ** n
    return (-s if q & 1 else s, -s if q & 2 else s)


def square_id_from_coords(x: float, y: float) -> int:
    if abs(x) != abs(y) or x == 0:
        raise ValueError(f"({x}, {y}) is not a vertex of the scaled-squares graph")
    n = round(math.log2(abs(x)))
    if 2.0 ** n != abs(x):
        raise ValueError(f"({x}, {y}) is not a vertex of the scaled-squares graph")
    return square_id(n, (1 if x < 0 else 0) | (2 if y < 0 else 0))


def scaled_squares() -> LazyGraph:
    """Vertices ``(+-2^n, +-2^n)``; adjacent when exactly one coordinate
    agrees, or when one point is twice the other."""
    def nbrs(v: int) -> list[int]:
        n, q = square_point(v)
        # agreeing x flips the y sign, agreeing y flips the x sign
        return [square_id(n, q ^ 2), square_id(n, q ^ 1), square_id(n - 1, q), square_id(n + 1, q)]

    return LazyGraph(nbrs, square_id(0, 0), "scaled_squares", (), 4)


GENERATORS: dict[str, Callable[..., LazyGraph]] = {
    "biinfinite_path": biinfinite_path,
    "grid2d": grid2d,
    "ladder": ladder,
    "regular_tree": regular_tree,
    "scaled_squares": scaled_squares,
}


def generator(name: str, *params: int) -> LazyGraph:
    try:
        return GENERATORS[name](*params)
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}") from None
