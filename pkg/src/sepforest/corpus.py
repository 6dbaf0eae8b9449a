"""Named test graphs and deterministic random generators."""

from __future__ import annotations

import random
from typing import Callable

from .connectivity import is_k_connected
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    grid_graph,
    k4_minus_edge,
    octahedron_graph,
    path_graph,
    petersen_graph,
    prism_graph,
    star_graph,
    wheel_graph,
)
from .planar import is_planar
from .separations import Separation, complement, nested, proper_separations


def icosahedron_graph() -> Graph:
    """Apexes 0 and 11, pentagons 1..5 and 6..10 in antiprism position."""
    es = [(0, i) for i in range(1, 6)] + [(11, i) for i in range(6, 11)]
    for i in range(5):
        es += [(1 + i, 1 + (i + 1) % 5), (6 + i, 6 + (i + 1) % 5)]
        es += [(1 + i, 6 + i), (1 + i, 6 + (i + 4) % 5)]
    return Graph(range(12), es)


def binary_tree(depth: int) -> Graph:
    n = 2 ** (depth + 1) - 1
    return Graph(range(n), ((i, (i - 1) // 2) for i in range(1, n)))


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph(range(5), [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def theta_graph(paths: int, length: int) -> Graph:
    """``paths`` internally disjoint paths with ``length`` inner vertices
    each between 0 and 1."""
    es = []
    nxt = 2
    for _ in range(paths):
        inner = list(range(nxt, nxt + length))
        nxt += length
        chain = [0] + inner + [1]
        es += list(zip(chain, chain[1:]))
    return Graph(range(nxt), es)


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(range(n), ((i, rng.randrange(i)) for i in range(1, n)))


def random_connected(n: int, extra: int, seed: int) -> Graph:
    """A random tree on ``n`` vertices plus ``extra`` random chords."""
    rng = random.Random(seed)
    es = {(rng.randrange(i), i) for i in range(1, n)}
    while len(es) < min(n - 1 + extra, n * (n - 1) // 2):
        a, b = sorted(rng.sample(range(n), 2))
        es.add((a, b))
    return Graph(range(n), es)


def random_planar(n: int, seed: int) -> Graph:
    """Maximal-ish random planar graph: chords added to a cycle in random
    order whenever planarity survives."""
    rng = random.Random(seed)
    g = cycle_graph(n)
    pairs = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]
    rng.shuffle(pairs)
    for a, b in pairs:
        trial = Graph(g.vertices, list(g.edges) + [(a, b)])
        if is_planar(trial).planar:
            g = trial
    return g


_NAMED: dict[str, Callable[[], Graph]] = {
    "P2": lambda: path_graph(2),
    "P3": lambda: path_graph(3),
    "P5": lambda: path_graph(5),
    "P8": lambda: path_graph(8),
    "C3": lambda: cycle_graph(3),
    "C4": lambda: cycle_graph(4),
    "C5": lambda: cycle_graph(5),
    "C6": lambda: cycle_graph(6),
    "C9": lambda: cycle_graph(9),
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K4e": k4_minus_edge,
    "K23": lambda: complete_bipartite(2, 3),
    "K33": lambda: complete_bipartite(3, 3),
    "star4": lambda: star_graph(4),
    "bowtie": bowtie,
    "theta3x2": lambda: theta_graph(3, 2),
    "bintree3": lambda: binary_tree(3),
    "Q3": cube_graph,
    "petersen": petersen_graph,
    "W4": lambda: wheel_graph(4),
    "W5": lambda: wheel_graph(5),
    "W6": lambda: wheel_graph(6),
    "W8": lambda: wheel_graph(8),
    "prism3": lambda: prism_graph(3),
    "prism4": lambda: prism_graph(4),
    "prism5": lambda: prism_graph(5),
    "octahedron": octahedron_graph,
    "icosahedron": icosahedron_graph,
    "grid2x3": lambda: grid_graph(2, 3),
    "grid2x5": lambda: grid_graph(2, 5),
    "grid3x3": lambda: grid_graph(3, 3),
    "grid3x4": lambda: grid_graph(3, 4),
    "grid4x4": lambda: grid_graph(4, 4),
    "grid4x5": lambda: grid_graph(4, 5),
    "grid4x6": lambda: grid_graph(4, 6),
    "C20": lambda: cycle_graph(20),
    "tree12": lambda: random_tree(12, 7),
    "rand10": lambda: random_connected(10, 6, 1),
    "rand14": lambda: random_connected(14, 8, 2),
    "rand18": lambda: random_connected(18, 10, 3),
    "planar9": lambda: random_planar(9, 4),
    "planar12": lambda: random_planar(12, 5),
}


def names() -> list[str]:
    return list(_NAMED)


def get(name: str) -> Graph:
    try:
        return _NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown corpus graph {name!r}") from None


def corpus(max_vertices: int | None = None) -> list[tuple[str, Graph]]:
    out = [(n, f()) for n, f in _NAMED.items()]
    return [(n, g) for n, g in out if max_vertices is None or len(g) <= max_vertices]


def two_connected(max_vertices: int | None = None) -> list[tuple[str, Graph]]:
    return [(n, g) for n, g in corpus(max_vertices) if len(g) >= 3 and is_k_connected(g, 2)]


def two_connected_planar(max_vertices: int | None = None) -> list[tuple[str, Graph]]:
    return [(n, g) for n, g in two_connected(max_vertices) if is_planar(g).planar]


def three_connected_planar(max_vertices: int | None = None) -> list[tuple[str, Graph]]:
    return [(n, g) for n, g in two_connected_planar(max_vertices) if len(g) >= 4 and is_k_connected(g, 3)]


def sample_nested_system(g: Graph, rng: random.Random, order: int = 3, limit: int = 12,
                         pool: list[Separation] | None = None) -> list[Separation]:
    """Random symmetric nested family of proper separations of order at
    most ``order``: candidates in shuffled order, each kept with its
    complement when nested with everything kept so far."""
    candidates = list(proper_separations(g, order) if pool is None else pool)
    rng.shuffle(candidates)
    chosen: list[Separation] = []
    for s in candidates:
        if len(chosen) >= limit:
            break
        if s in chosen:
            continue
        c = complement(s, g)
        if all(nested(g, s, t) and nested(g, c, t) for t in chosen):
            chosen += [s, c]
    return sorted(set(chosen))
