"""Combinatorial planarity: rotation systems, faces, 2-bases, the
orientation cocycle of a 3-connected planar graph and its double cover.

The planarity verdict and a realizing embedding come from networkx's
left-right planarity test; everything downstream (faces, Euler check,
bases, cocycle) works on plain rotation systems.  ``exhaustive_rotations``
is the brute-force route used to cross-check at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping

import networkx as nx

from .connectivity import internally_disjoint_paths, is_k_connected
from .gf2 import EdgeIndex, cycle_space_dimension, fundamental_cycles, is_cycle_edge_set, rank
from .graph import Edge, Graph, GraphError, connected_components, edge


class NotPlanar(GraphError):
    pass


class InvalidRotation(GraphError):
    pass


def _normalize(order: Iterable[int]) -> tuple[int, ...]:
    """Rotate a cyclic order so it starts at its least entry."""
    order = tuple(order)
    if not order:
        return order
    i = order.index(min(order))
    return order[i:] + order[:i]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic successor order of the neighbours at each vertex."""

    order: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def of(cls, mapping: Mapping[int, Iterable[int]]) -> "RotationSystem":
        return cls(tuple((v, _normalize(mapping[v])) for v in sorted(mapping)))

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.order)

    def at(self, v: int) -> tuple[int, ...]:
        return self.as_dict()[v]

    def successor(self, v: int, u: int) -> int:
        cyc = self.at(v)
        return cyc[(cyc.index(u) + 1) % len(cyc)]

    def reversed(self) -> "RotationSystem":
        return RotationSystem.of({v: cyc[::-1] for v, cyc in self.order})

    def reversed_at(self, vs: Iterable[int]) -> "RotationSystem":
        flip = set(vs)
        return RotationSystem.of({v: (cyc[::-1] if v in flip else cyc) for v, cyc in self.order})

    def key(self) -> tuple:
        return self.order

    def check(self, g: Graph) -> None:
        d = self.as_dict()
        if set(d) != set(g.vertices):
            raise InvalidRotation("rotation system and graph have different vertex sets")
        for v, cyc in d.items():
            if len(set(cyc)) != len(cyc) or set(cyc) != set(g.neighbors(v)):
                raise InvalidRotation(f"rotation at {v} is not a cyclic order of its neighbours")

    def __str__(self) -> str:
        return format_rotation(self)


def format_rotation(rs: RotationSystem) -> str:
    return "\n".join(f"{v}: " + " ".join(map(str, cyc)) for v, cyc in rs.order) + "\n"


def parse_rotation(text: str) -> RotationSystem:
    mapping = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, tail = line.partition(":")
        if not _:
            raise ValueError(f"malformed rotation line: {raw!r}")
        mapping[int(head)] = [int(t) for t in tail.split()]
    return RotationSystem.of(mapping)


def from_cyclic_triples(g: Graph, triples: Iterable[tuple[int, int, int, int]]) -> RotationSystem:
    """Build a rotation from ``(v, a, b, c)`` facts "a, b, c occur in this
    cyclic order around v" (all triples of each vertex must be given)."""
    facts: dict[int, set[tuple[int, int, int]]] = {}
    for v, a, b, c in triples:
        facts.setdefault(v, set()).add((a, b, c))
    mapping = {}
    for v in g.vertices:
        ns = sorted(g.neighbors(v))
        if len(ns) <= 2:
            mapping[v] = ns
            continue
        have = facts.get(v, set())
        found = None
        for perm in permutations(ns[1:]):
            cyc = (ns[0],) + perm
            if all(_cyclic(cyc, a, b, c) for a, b, c in have):
                found = cyc
                break
        if found is None:
            raise InvalidRotation(f"triples at {v} are not a cyclic order")
        mapping[v] = found
    return RotationSystem.of(mapping)


def _cyclic(cyc: tuple[int, ...], a: int, b: int, c: int) -> bool:
    i, j, k = cyc.index(a), cyc.index(b), cyc.index(c)
    return (i < j < k) or (j < k < i) or (k < i < j)


# -- faces ------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceWalk:
    darts: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)

    def edges(self) -> frozenset[Edge]:
        return frozenset(edge(u, v) for u, v in self.darts)


def faces(g: Graph, rs: RotationSystem) -> list[FaceWalk]:
    """Face walks: dart ``u -> v`` is followed by ``v -> succ_v(u)``.

    Walks start at their least unused dart, so the output is canonical.
    """
    rs.check(g)
    rot = rs.as_dict()
    succ = {v: {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))} for v, cyc in rot.items()}
    darts = sorted((u, v) for u in g.vertices for v in g.neighbors(u))
    used = set()
    out = []
    for start in darts:
        if start in used:
            continue
        walk = []
        d = start
        while d not in used:
            used.add(d)
            walk.append(d)
            u, v = d
            d = (v, succ[v][u])
        if d != start:
            raise InvalidRotation("face traversal did not close")
        out.append(FaceWalk(tuple(walk)))
    return out


def euler_characteristic(g: Graph, rs: RotationSystem) -> int:
    return len(g) - g.number_of_edges() + len(faces(g, rs))


def is_spherical(g: Graph, rs: RotationSystem) -> bool:
    """``V - E + F = 2`` for a connected graph (isolated vertex: a sphere too)."""
    if not g.is_connected():
        raise GraphError("sphericity check needs a connected graph")
    if g.number_of_edges() == 0:
        return True
    return euler_characteristic(g, rs) == 2


# -- planarity ------------------------------------------------------------------------

def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


@dataclass(frozen=True)
class KuratowskiWitness:
    subgraph: Graph
    kind: str  # "K5" or "K3,3"


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: RotationSystem | None = None
    witness: KuratowskiWitness | None = None

    def __bool__(self) -> bool:
        return self.planar


def kuratowski_kind(h: Graph) -> str | None:
    """``"K5"`` or ``"K3,3"`` if ``h`` is a subdivision of one, else ``None``."""
    h = Graph(
        [v for v in h.vertices if h.degree(v) > 0],
        h.edges,
    )
    branch = [v for v in h.vertices if h.degree(v) >= 3]
    if any(h.degree(v) == 1 for v in h.vertices):
        return None
    bset = set(branch)
    links = []
    used = set()
    for b in branch:
        for n in sorted(h.neighbors(b)):
            if edge(b, n) in used:
                continue
            prev, cur = b, n
            used.add(edge(prev, cur))
            while cur not in bset:
                nxt = [w for w in h.neighbors(cur) if w != prev]
                if len(nxt) != 1:
                    return None
                prev, cur = cur, nxt[0]
                used.add(edge(prev, cur))
            links.append(edge(b, cur))
    if used != set(h.edges) or len(set(links)) != len(links) or any(a == b for a, b in links):
        return None
    core = Graph(branch, links)
    if not core.is_connected():
        return None
    if len(branch) == 5 and core.number_of_edges() == 10:
        return "K5"
    if len(branch) == 6 and core.number_of_edges() == 9 and all(core.degree(v) == 3 for v in branch):
        side = _bipartition(core)
        if side is not None and sorted(map(len, side)) == [3, 3]:
            return "K3,3"
    return None


def _bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    colour = {}
    for root in g.vertices:
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            a = stack.pop()
            for b in g.neighbors(a):
                if b not in colour:
                    colour[b] = 1 - colour[a]
                    stack.append(b)
                elif colour[b] == colour[a]:
                    return None
    return ({v for v, c in colour.items() if c == 0}, {v for v, c in colour.items() if c == 1})


def is_planar(g: Graph) -> PlanarityResult:
    """Planarity verdict with a realizing rotation or a Kuratowski subgraph."""
    planar, cert = nx.check_planarity(_to_nx(g), counterexample=True)
    if planar:
        rs = RotationSystem.of({v: list(cert.neighbors_cw_order(v)) for v in g.vertices})
        for comp in connected_components(g):
            sub = g.induced(comp)
            if not is_spherical(sub, restrict(rs, comp)):
                raise GraphError("embedding from the planarity test fails the Euler check")
        return PlanarityResult(True, rotation=rs)
    sub = Graph((), ((int(a), int(b)) for a, b in cert.edges()))
    kind = kuratowski_kind(sub)
    if kind is None:
        raise GraphError("planarity test returned an unrecognised obstruction")
    return PlanarityResult(False, witness=KuratowskiWitness(sub, kind))


def restrict(rs: RotationSystem, vs: Iterable[int]) -> RotationSystem:
    keep = set(vs)
    return RotationSystem.of({v: [u for u in cyc if u in keep] for v, cyc in rs.order if v in keep})


def exhaustive_rotations(g: Graph, cap: int = 500_000) -> Iterator[RotationSystem]:
    """Every spherical rotation system of a connected graph, by brute force
    over all cyclic orders (refuses when there are more than ``cap``)."""
    choices = []
    total = 1
    for v in g.vertices:
        ns = sorted(g.neighbors(v))
        opts = [(ns[0],) + p for p in permutations(ns[1:])] if ns else [()]
        choices.append(opts)
        total *= len(opts)
    if total > cap:
        raise ValueError(f"{total} rotation systems exceed the cap {cap}")
    target = 2 - len(g) + g.number_of_edges()
    for combo in product(*choices):
        rs = RotationSystem(tuple(zip(g.vertices, combo)))
        if len(faces(g, rs)) == target:
            yield rs


def local_rotations(g: Graph, v: int, cap: int = 500_000) -> set[tuple[int, ...]]:
    """Cyclic orders at ``v`` occurring in some spherical rotation system."""
    return {rs.at(v) for rs in exhaustive_rotations(g, cap)}


# -- 2-bases ------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoBasis:
    cycles: tuple[frozenset[Edge], ...]

    def __len__(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class BasisReport:
    ok: bool
    simple: bool
    generating: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def outer_face(fs: list[FaceWalk]) -> FaceWalk:
    """The face walk holding the least directed edge."""
    return min(fs, key=lambda f: min(f.darts))


def two_basis(g: Graph) -> TwoBasis:
    """Bounded faces of a planar embedding of a 2-connected graph."""
    if len(g) < 3 or not g.is_connected() or not is_k_connected(g, 2):
        raise GraphError("two_basis needs a 2-connected graph")
    res = is_planar(g)
    if not res.planar:
        raise NotPlanar(f"graph is not planar ({res.witness.kind} subdivision found)")
    fs = faces(g, res.rotation)
    outer = outer_face(fs)
    return TwoBasis(tuple(f.edges() for f in fs if f is not outer))


def verify_two_basis(g: Graph, basis: TwoBasis | Iterable[frozenset[Edge]]) -> BasisReport:
    """Simple (each edge in at most two members) and generating the cycle
    space (GF(2) rank against a fundamental cycle basis)."""
    cycles = list(basis.cycles if isinstance(basis, TwoBasis) else basis)
    problems = []
    idx = EdgeIndex(g)
    count: dict[Edge, int] = {}
    for c in cycles:
        if not is_cycle_edge_set(c) or not set(c) <= g.edges:
            problems.append(f"member {sorted(c)} is not a cycle of the graph")
        for e in c:
            count[e] = count.get(e, 0) + 1
    over = sorted(e for e, k in count.items() if k > 2)
    simple = not over
    if over:
        problems.append(f"edge {over[0]} lies in {count[over[0]]} members")
    vecs = [idx.mask(c) for c in cycles if set(c) <= g.edges]
    fund = [idx.mask(c) for c in fundamental_cycles(g)]
    dim = cycle_space_dimension(g)
    generating = rank(vecs) == dim and rank(vecs + fund) == dim
    if not generating:
        problems.append(f"span has rank {rank(vecs)} inside a cycle space of dimension {dim}")
    return BasisReport(not problems, simple, generating, tuple(problems))


# -- equivalence and canonical choice ---------------------------------------------------

def combinatorially_equivalent(rs1: RotationSystem, rs2: RotationSystem) -> bool:
    """Equal, or equal after reversing every rotation."""
    return rs1 == rs2 or rs1 == rs2.reversed()


@lru_cache(maxsize=64)
def _require_three_connected_planar(g: Graph) -> RotationSystem:
    if len(g) < 4 or not g.is_connected() or not is_k_connected(g, 3):
        raise GraphError("graph is not 3-connected")
    res = is_planar(g)
    if not res.planar:
        raise NotPlanar(f"graph is not planar ({res.witness.kind} subdivision found)")
    return res.rotation


def rotation_choice(g: Graph) -> RotationSystem:
    """The lexicographically least of the two spherical rotation systems of
    a 3-connected planar graph."""
    rs = _require_three_connected_planar(g)
    return min(rs, rs.reversed(), key=RotationSystem.key)


# -- cocycle and double cover -------------------------------------------------------------

def cycle_pair(g: Graph, x: int, y: int) -> tuple[list[int], list[int]]:
    """Two ``x``-``y`` paths avoiding the edge ``xy`` and meeting only at
    the ends: the shortest (lexicographically least) first, then the
    shortest one disjoint from it; a flow-based pair if that greedy pick
    leaves none."""
    e = edge(x, y)
    first = g.shortest_path(x, y, banned_edges=[e])
    if first is None:
        raise GraphError(f"no cycle through edge {e}")
    second = g.shortest_path(x, y, avoid=first[1:-1], banned_edges=[e])
    if second is not None:
        return first, second
    res = internally_disjoint_paths(g.remove_edges([e]), x, y, 2)
    if not res.ok:
        raise GraphError(f"no pair of disjoint cycles through edge {e}")
    a, b = sorted((list(p.vertices) for p in res.paths[:2]), key=lambda p: (len(p), p))
    return a, b


def spherical_cocycle(g: Graph, rotations: Mapping[int, Iterable[int]]) -> dict[Edge, int]:
    """``c(xy) = 0`` iff the local rotations at ``x`` and ``y`` come from
    the same spherical embedding.

    With ``A``, ``B`` the two canonical cycles through ``xy``, ``A_x`` the
    neighbour of ``x`` on ``A`` other than ``y`` (and so on), one embedding
    puts ``(y, A_x, B_x)`` around ``x`` in the opposite cyclic sense to
    ``(x, A_y, B_y)`` around ``y``.
    """
    ref = _require_three_connected_planar(g)
    rot = {v: tuple(cyc) for v, cyc in rotations.items()}
    for v in g.vertices:
        if v not in rot:
            raise InvalidRotation(f"no rotation given at {v}")
        local = _normalize(rot[v])
        if local != ref.at(v) and local != _normalize(ref.at(v)[::-1]):
            raise InvalidRotation(f"rotation at {v} is not realizable by a spherical embedding")
    c = {}
    for x, y in g.sorted_edges():
        pa, pb = cycle_pair(g, x, y)
        ax, bx = pa[1], pb[1]
        ay, by = pa[-2], pb[-2]
        ox = _cyclic(rot[x], y, ax, bx)
        oy = _cyclic(rot[y], x, ay, by)
        c[(x, y)] = 0 if ox != oy else 1
    return c


@dataclass(frozen=True)
class DoubleCover:
    graph: Graph
    rotation: RotationSystem
    projection: dict[int, int]

    @staticmethod
    def lift(x: int, i: int) -> int:
        return 2 * x + i


def double_cover(g: Graph, rotations: Mapping[int, Iterable[int]], c: Mapping[Edge, int]) -> DoubleCover:
    """``(x, i) ~ (y, j)`` iff ``i = c(xy) + j (mod 2)``; the rotation at
    ``(x, 0)`` lifts ``rot(x)`` and the one at ``(x, 1)`` its reverse.
    ``(x, i)`` gets id ``2x + i``."""
    lift = DoubleCover.lift
    es = []
    for x, y in g.sorted_edges():
        bit = c[(x, y)] & 1
        for j in (0, 1):
            es.append((lift(x, (bit + j) % 2), lift(y, j)))
    h = Graph((lift(x, i) for x in g.vertices for i in (0, 1)), es)
    rot = {}
    for x in g.vertices:
        cyc = list(rotations[x])
        for i in (0, 1):
            order = cyc if i == 0 else cyc[::-1]
            rot[lift(x, i)] = [lift(y, (i + c[edge(x, y)]) % 2) for y in order]
    rs = RotationSystem.of(rot)
    rs.check(h)
    return DoubleCover(h, rs, {v: v // 2 for v in h.vertices})


def is_local_isomorphism(g: Graph, cover: DoubleCover) -> bool:
    """Projection is 2-to-1 and maps each neighbourhood bijectively."""
    p = cover.projection
    fibres: dict[int, int] = {}
    for v in cover.graph.vertices:
        fibres[p[v]] = fibres.get(p[v], 0) + 1
    if set(fibres) != set(g.vertices) or any(k != 2 for k in fibres.values()):
        return False
    for v in cover.graph.vertices:
        image = [p[w] for w in cover.graph.neighbors(v)]
        if len(set(image)) != len(image) or set(image) != set(g.neighbors(p[v])):
            return False
    return True


def component_cocycles(cover: DoubleCover) -> list[dict[Edge, int]]:
    """Cocycle of the lifted rotation on each component of the cover."""
    out = []
    rot = cover.rotation.as_dict()
    for comp in connected_components(cover.graph):
        sub = cover.graph.induced(comp)
        out.append(spherical_cocycle(sub, {v: rot[v] for v in comp}))
    return out
