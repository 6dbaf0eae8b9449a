"""Tutte decomposition of 2-connected graphs from the order-2 separations
that are nested with every other order-2 separation."""

from __future__ import annotations

from enum import Enum
from itertools import combinations

from .connectivity import is_k_connected
from .gf2 import fundamental_cycles
from .graph import Edge, Graph, GraphError, components_within
from .separations import Separation, nested
from .treedecomp import TreeDecomposition, Torso, chm_tree, make_system, torso


class NotTwoConnected(GraphError):
    pass


class TorsoClass(Enum):
    THREE_CONNECTED = "ThreeConnected"
    CYCLE = "Cycle"
    EDGE = "Edge"

    def __str__(self) -> str:
        return self.value


def _require_two_connected(g: Graph) -> None:
    if len(g) < 3 or not g.is_connected() or not is_k_connected(g, 2):
        raise NotTwoConnected("graph is not 2-connected")


def two_separations(g: Graph) -> list[Separation]:
    """All proper separations with ``|S| = 2``, canonically ordered."""
    _require_two_connected(g)
    out = []
    for pair in combinations(g.vertices, 2):
        S = frozenset(pair)
        comps = components_within(g, set(g.vertices) - S)
        if len(comps) < 2:
            continue
        dS = g.boundary(S)
        groups = [frozenset(e for e in dS if (e[1] if e[0] in S else e[0]) in c) for c in comps]
        for mask in range(1, (1 << len(groups)) - 1):
            B = frozenset().union(*(grp for i, grp in enumerate(groups) if mask >> i & 1))
            out.append(Separation(S, B, dS))
    out.sort()
    return out


def totally_nested(seps: list[Separation], g: Graph) -> list[Separation]:
    """Members nested with every member of ``seps``."""
    return [s for s in seps if all(nested(g, s, t) for t in seps)]


def tutte_decomposition(g: Graph) -> TreeDecomposition:
    seps = two_separations(g)
    return chm_tree(make_system(totally_nested(seps, g), g), g)


def _is_cycle(h: Graph) -> bool:
    return len(h) >= 3 and h.is_connected() and all(h.degree(v) == 2 for v in h.vertices)


def classify_torso(t: Torso | Graph) -> TorsoClass:
    h = t.graph if isinstance(t, Torso) else t
    if len(h) == 2 and h.number_of_edges() == 1:
        return TorsoClass.EDGE
    if _is_cycle(h):
        return TorsoClass.CYCLE
    if len(h) >= 4 and h.is_connected() and is_k_connected(h, 3):
        return TorsoClass.THREE_CONNECTED
    raise GraphError(f"torso on {sorted(h.vertices)} is neither 3-connected, a cycle nor an edge")


def classify_all(td: TreeDecomposition) -> list[TorsoClass]:
    return [classify_torso(torso(td, t)) for t in td.nodes]


def virtual_edge_paths(td: TreeDecomposition) -> dict[tuple[int, Edge], list[int]]:
    """For each virtual edge ``ab`` of each torso, an ``a``-``b`` path of the
    base graph whose inner vertices avoid that torso's part."""
    g = td.base
    out = {}
    for t in td.nodes:
        bag = td.bags[t]
        for a, b in sorted(torso(td, t).virtual_edges):
            path = g.shortest_path(a, b, avoid=bag - {a, b})
            if path is None:
                raise GraphError(f"virtual edge {(a, b)} of part {t} has no realizing path")
            out[(t, (a, b))] = path
    return out


def torso_annotations(td: TreeDecomposition) -> list[str]:
    """``c torso <bag id> <class>`` lines for the text form."""
    return [f"c torso {t + 1} {cls}" for t, cls in enumerate(classify_all(td))]


# -- graphs that are connected but not 2-connected -------------------------------

def blocks(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks (maximal 2-connected subgraphs and bridges)
    of a graph, ordered by least vertex then size.

    Two edges lie in one block when a chain of fundamental cycles joins
    them, so a union-find over the edges of each fundamental cycle groups
    the edges block by block.
    """
    parent = {e: e for e in g.edges}

    def find(e: Edge) -> Edge:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for cyc in fundamental_cycles(g):
        first, *rest = sorted(cyc)
        for e in rest:
            a, b = find(first), find(e)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[Edge, set[int]] = {}
    for e in g.edges:
        groups.setdefault(find(e), set()).update(e)
    out = [frozenset(vs) for vs in groups.values()]
    out.extend(frozenset([v]) for v in g.vertices if g.degree(v) == 0)
    return sorted(out, key=lambda b: (min(b), len(b), sorted(b)))


def _block_decomposition(g: Graph, block: frozenset[int]) -> TreeDecomposition:
    h = g.induced(block)
    if len(h) < 3:
        return TreeDecomposition(h, Graph([0]), (block,))
    return tutte_decomposition(h)


def block_tutte_decomposition(g: Graph) -> TreeDecomposition:
    """Tutte decomposition of every block, glued into one tree.

    Blocks are visited along the block-cutvertex tree; a block reached
    through the cutvertex ``c`` has its least bag holding ``c`` joined to
    the least such bag of the block it was reached from.
    """
    if len(g) == 0 or not g.is_connected():
        raise GraphError("graph must be connected and non-empty")
    if len(g) >= 3 and is_k_connected(g, 2):
        return tutte_decomposition(g)
    parts = blocks(g)
    decomps = [_block_decomposition(g, b) for b in parts]
    offsets = []
    total = 0
    for td in decomps:
        offsets.append(total)
        total += len(td.bags)
    bags = tuple(bag for td in decomps for bag in td.bags)
    tree_edges = [(offsets[i] + a, offsets[i] + b) for i, td in enumerate(decomps) for a, b in td.tree.edges]

    def anchor(i: int, v: int) -> int:
        return offsets[i] + min(t for t in decomps[i].nodes if v in decomps[i].bags[t])

    seen = {0}
    queue = [0]
    while queue:
        i = queue.pop(0)
        for v in sorted(parts[i]):
            for j, other in enumerate(parts):
                if j not in seen and v in other:
                    seen.add(j)
                    tree_edges.append((anchor(i, v), anchor(j, v)))
                    queue.append(j)
    return TreeDecomposition(g, Graph(range(total), tree_edges), bags)
