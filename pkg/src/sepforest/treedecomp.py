"""Nested separation systems and the tree decompositions they induce.

The construction: on a nested system, ``s ~ t`` when ``s = t`` or ``s^-``
is a predecessor of ``t`` (an immediate lower neighbour in ``<=``).  The
classes are the nodes of the decomposition tree, ``[s]`` is joined to
``[s^-]``, and the part of a class is the intersection of the ``A1`` sides
of its members.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Edge, Graph, GraphError, connected_components, edge, is_forest
from .separations import (
    InvalidSeparation,
    Separation,
    complement,
    is_proper,
    leq,
    nested,
    sides,
    validate_separation,
    with_boundary,
)


class NotNested(GraphError):
    pass


@dataclass(frozen=True)
class SeparationSystem:
    graph: Graph
    members: tuple[Separation, ...]
    nested: bool

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, sep: object) -> bool:
        return sep in set(self.members)

    def as_set(self) -> frozenset[Separation]:
        return frozenset(self.members)


def _all_nested(g: Graph, seps: Sequence[Separation]) -> bool:
    return all(nested(g, a, b) for a, b in combinations(seps, 2))


def make_system(seps: Iterable[Separation], g: Graph) -> SeparationSystem:
    """Smallest separation system containing ``seps``: add complements and
    reject improper members."""
    members = set()
    for s in seps:
        s = with_boundary(g, s)
        validate_separation(g, s.S, s.B)
        if not is_proper(g, s):
            raise InvalidSeparation(f"improper separation {s}")
        members.add(s)
        members.add(complement(s))
    ordered = tuple(sorted(members))
    return SeparationSystem(g, ordered, _all_nested(g, ordered))


# -- order structure -------------------------------------------------------------

def _strict_order(sys: SeparationSystem) -> list[list[bool]]:
    g, ms = sys.graph, sys.members
    n = len(ms)
    less = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and leq(g, ms[i], ms[j]):
                less[i][j] = True
    return less


@dataclass(frozen=True)
class StarReport:
    """Outcome of the property (*) check on a finite system.

    ``max_between`` is the largest number of members strictly between a
    strict pair and ``longest_chain`` the number of members on a longest
    strict chain.
    """

    ok: bool
    max_between: int
    longest_chain: int


def check_property_star(sys: SeparationSystem) -> StarReport:
    """Every strict pair has finitely many members strictly between.

    Finite systems always pass; the report records how long the chains are,
    which is what a growing truncation of an infinite system shows.
    """
    if not sys.nested:
        raise NotNested("property (*) is only defined for nested systems")
    less = _strict_order(sys)
    n = len(sys.members)
    worst = 0
    for i in range(n):
        for j in range(n):
            if less[i][j]:
                between = sum(1 for k in range(n) if less[i][k] and less[k][j])
                worst = max(worst, between)
    # longest chain via DP over a topological order (count of strict predecessors)
    order = sorted(range(n), key=lambda i: sum(less[k][i] for k in range(n)))
    depth = [1] * n
    for j in order:
        for i in range(n):
            if less[i][j]:
                depth[j] = max(depth[j], depth[i] + 1)
    return StarReport(True, worst, max(depth, default=0))


# -- tree decompositions ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TreeDecomposition:
    base: Graph
    tree: Graph
    bags: tuple[frozenset[int], ...]
    # member separations of each node when built from a system
    classes: tuple[tuple[Separation, ...], ...] | None = field(default=None, repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeDecomposition):
            return NotImplemented
        return self.base == other.base and self.tree == other.tree and self.bags == other.bags

    def __hash__(self) -> int:
        return hash((self.base, self.tree, self.bags))

    @property
    def nodes(self) -> range:
        return range(len(self.bags))

    def bag(self, t: int) -> frozenset[int]:
        return self.bags[t]


def width(td: TreeDecomposition) -> int:
    return max((len(b) for b in td.bags), default=0) - 1


def _component_seps(sys: SeparationSystem, comp: frozenset[int]) -> list[Separation]:
    return [s for s in sys.members if next(iter(s.S)) in comp]


def chm_tree(sys: SeparationSystem, g: Graph | None = None) -> TreeDecomposition:
    """Tree decomposition induced by a nested system with property (*)."""
    g = sys.graph if g is None else g
    if g != sys.graph:
        raise GraphError("system belongs to a different graph")
    if not sys.nested:
        raise NotNested("chm_tree needs a nested system")
    bags: list[frozenset[int]] = []
    classes: list[tuple[Separation, ...]] = []
    tree_edges: list[tuple[int, int]] = []
    for comp in connected_components(g):
        members = _component_seps(sys, comp)
        if not members:
            bags.append(frozenset(comp))
            classes.append(())
            continue
        sub = SeparationSystem(g, tuple(members), True)
        less = _strict_order(sub)
        n = len(members)
        index = {s: i for i, s in enumerate(members)}
        comp_of = [index[complement(s)] for s in members]
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(n):
            c = comp_of[i]
            for j in range(n):
                if less[c][j] and not any(less[c][k] and less[k][j] for k in range(n)):
                    parent[find(j)] = find(i)
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        ordered = sorted(groups.values(), key=lambda grp: members[grp[0]].key())
        base_id = len(bags)
        node_of = {}
        for k, grp in enumerate(ordered):
            for i in grp:
                node_of[i] = base_id + k
            part = frozenset(comp)
            for i in grp:
                part &= sides(g, members[i]).A1
            bags.append(part)
            classes.append(tuple(members[i] for i in grp))
        seen = set()
        for i in range(n):
            a, b = node_of[i], node_of[comp_of[i]]
            if a == b:
                raise GraphError(f"separation {members[i]} and its complement fall in one class")
            e = edge(a, b)
            if e not in seen:
                seen.add(e)
                tree_edges.append(e)
    tree = Graph(range(len(bags)), tree_edges)
    return TreeDecomposition(g, tree, tuple(bags), tuple(classes))


def trivial_decomposition(g: Graph) -> TreeDecomposition:
    """One bag per component."""
    return chm_tree(SeparationSystem(g, (), True), g)


def _tree_side(td: TreeDecomposition, t1: int, t2: int) -> set[int]:
    """Nodes on ``t1``'s side of the tree edge ``t1 t2``."""
    seen = {t1}
    queue = deque([t1])
    while queue:
        a = queue.popleft()
        for b in td.tree.neighbors(a):
            if b not in seen and not (a == t1 and b == t2):
                seen.add(b)
                queue.append(b)
    return seen


def edge_separations(td: TreeDecomposition, t1: int, t2: int) -> tuple[Separation, Separation] | None:
    """The pair ``(S, B1), (S, B2)`` induced by the tree edge ``t1 t2``;
    ``None`` when the adhesion set is empty."""
    g = td.base
    S = td.bags[t1] & td.bags[t2]
    if not S:
        return None
    near = set().union(*(td.bags[t] for t in _tree_side(td, t1, t2)))
    dS = g.boundary(S)
    B1 = frozenset(e for e in dS if (e[1] if e[0] in S else e[0]) in near)
    return validate_separation(g, S, B1), validate_separation(g, S, dS - B1)


def induced_separations(td: TreeDecomposition) -> SeparationSystem:
    """All separations induced by tree edges, as a system."""
    report = validate_tree_decomposition(td.base, td)
    if not report.ok:
        raise GraphError("invalid tree decomposition: " + "; ".join(report.problems))
    out = set()
    for t1, t2 in td.tree.sorted_edges():
        pair = edge_separations(td, t1, t2)
        if pair is not None:
            out.update(pair)
    ordered = tuple(sorted(out))
    return SeparationSystem(td.base, ordered, _all_nested(td.base, ordered))


# -- torsos ----------------------------------------------------------------------

@dataclass(frozen=True)
class Torso:
    graph: Graph
    part: int
    virtual_edges: frozenset[Edge]


def torso(td: TreeDecomposition, t: int) -> Torso:
    g = td.base
    bag = td.bags[t]
    real = g.induced(bag)
    virtual = set()
    for u in td.tree.neighbors(t):
        shared = sorted(bag & td.bags[u])
        for a, b in combinations(shared, 2):
            if not g.has_edge(a, b):
                virtual.add((a, b))
    return Torso(Graph(bag, list(real.edges) + sorted(virtual)), t, frozenset(virtual))


def torsos(td: TreeDecomposition) -> list[Torso]:
    return [torso(td, t) for t in td.nodes]


# -- validation --------------------------------------------------------------------

@dataclass(frozen=True)
class TDReport:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> TDReport:
    """Check the tree and the three axioms: (i) vertex cover, (ii) edge
    cover, (iii) the nodes whose bags hold a vertex form a subtree."""
    problems = []
    if set(td.tree.vertices) != set(td.nodes):
        problems.append("tree nodes do not match the bag indices")
    if not is_forest(td.tree):
        problems.append("tree: decomposition graph has a cycle")
    else:
        n_tree = len(connected_components(td.tree))
        n_base = len(connected_components(g))
        if n_tree != n_base:
            problems.append(f"tree: {n_tree} tree components for {n_base} base components")
    covered = set().union(*td.bags) if td.bags else set()
    for v in g.vertices:
        if v not in covered:
            problems.append(f"axiom (i): vertex {v} lies in no bag")
    for u, v in g.sorted_edges():
        if not any(u in b and v in b for b in td.bags):
            problems.append(f"axiom (ii): edge ({u}, {v}) lies in no bag")
    stray = covered - set(g.vertices)
    if stray:
        problems.append(f"bags mention non-vertices {sorted(stray)}")
    for v in g.vertices:
        holding = {t for t in td.nodes if v in td.bags[t]}
        if holding and len(td.tree.component_of(min(holding), within=holding)) != len(holding):
            problems.append(f"axiom (iii): bags containing {v} do not form a subtree")
    return TDReport(not problems, tuple(problems))


# -- PACE-style text form -------------------------------------------------------------

def format_td(td: TreeDecomposition, annotations: Iterable[str] = ()) -> str:
    """``s td`` header, ``b`` bag lines (bag ids from 1), tree edges.

    Vertex ids are written as they are; extra ``c ...`` comment lines go
    right after the header.
    """
    n_vertices = len(td.base)
    lines = [f"s td {len(td.bags)} {width(td) + 1} {n_vertices}"]
    lines.extend(annotations)
    for t, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(t + 1)] + [str(v) for v in sorted(bag)]))
    for a, b in td.tree.sorted_edges():
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def parse_td(text: str, g: Graph) -> TreeDecomposition:
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if len(parts) != 5 or parts[1] != "td":
                raise ValueError(f"malformed header: {raw!r}")
            header = tuple(int(p) for p in parts[2:])
        elif parts[0] == "b":
            if header is None:
                raise ValueError("bag line before header")
            bags[int(parts[1])] = frozenset(int(p) for p in parts[2:])
        else:
            if len(parts) != 2:
                raise ValueError(f"malformed tree edge: {raw!r}")
            edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
    if header is None:
        raise ValueError("missing 's td' header")
    n_bags, max_bag, _ = header
    if sorted(bags) != list(range(1, n_bags + 1)):
        raise ValueError("bag ids must be 1..#bags")
    if max((len(b) for b in bags.values()), default=0) != max_bag:
        raise ValueError("header bag size does not match the bags")
    ordered = tuple(bags[i] for i in range(1, n_bags + 1))
    return TreeDecomposition(g, Graph(range(n_bags), edges), ordered)
