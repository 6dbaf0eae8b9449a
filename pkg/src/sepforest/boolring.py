"""The Boolean ring of a graph: ``F2``-valued vertex functions with finite
coboundary, the bijection with separations, thin elements, and the
Dicks-Dunwoody extraction of a nested thin generating set.

Functions are stored by their support (the vertices with value 1).  The
ring generated by a family of functions is the Boolean algebra of unions of
its atoms, which is how membership and closure are decided here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .connectivity import min_edge_cut
from .graph import Edge, Graph, GraphError, edge
from .separations import Separation, sides, validate_separation

DEFAULT_CLOSURE_CAP = 1 << 16


class ClosureCapExceeded(RuntimeError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"subring closure has {size} elements, cap is {cap}")
        self.size = size
        self.cap = cap


class ConstantFunction(GraphError):
    """A constant function has empty coboundary and no separation."""


@dataclass(frozen=True)
class BoolFn:
    support: frozenset[int]

    @classmethod
    def of(cls, vs: Iterable[int]) -> "BoolFn":
        return cls(frozenset(vs))

    def __call__(self, v: int) -> int:
        return int(v in self.support)

    def __add__(self, other: "BoolFn") -> "BoolFn":
        return BoolFn(self.support ^ other.support)

    def __mul__(self, other: "BoolFn") -> "BoolFn":
        return BoolFn(self.support & other.support)

    def __le__(self, other: "BoolFn") -> bool:  # pointwise order
        return self.support <= other.support

    def __ge__(self, other: "BoolFn") -> bool:
        return self.support >= other.support

    def star(self, g: Graph) -> "BoolFn":
        """``f* = 1 + f``."""
        return BoolFn(frozenset(g.vertices) - self.support)

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))

    def __repr__(self) -> str:
        return f"BoolFn({list(self.key())})"


def zero() -> BoolFn:
    return BoolFn(frozenset())


def one(g: Graph) -> BoolFn:
    return BoolFn(frozenset(g.vertices))


def coboundary(g: Graph, f: BoolFn) -> frozenset[Edge]:
    """Edges whose endpoints take different values."""
    return g.boundary(f.support)


# -- the bijection with separations ---------------------------------------------

def psi(g: Graph, sep: Separation) -> BoolFn:
    """The element with coboundary ``B`` that is 1 on ``S``: the indicator of
    the ``A2`` side."""
    return BoolFn(sides(g, sep).A2)


def psi_inv(g: Graph, f: BoolFn) -> Separation:
    """``B = df`` and ``S`` = the 1-valued endpoints of ``B``."""
    B = coboundary(g, f)
    if not B:
        raise ConstantFunction("function with empty coboundary has no separation")
    S = frozenset(v for e in B for v in e if v in f.support)
    return validate_separation(g, S, B)


def nested_boolfns(g: Graph, f: BoolFn, h: BoolFn) -> bool:
    """``f >= h``, ``h >= f``, ``f* >= h`` or ``h* >= f`` (pointwise)."""
    fs, hs = f.support, h.support
    V = frozenset(g.vertices)
    return fs >= hs or hs >= fs or (V - fs) >= hs or (V - hs) >= fs


def corners_nested(g: Graph, f: BoolFn, h: BoolFn) -> bool:
    """Symmetric form: one of ``fh, fh*, f*h, f*h*`` vanishes.

    Agrees with :func:`nested_boolfns` on families closed under ``*``.
    """
    fs, hs = f.support, h.support
    V = frozenset(g.vertices)
    return not (fs & hs) or not (fs - hs) or not (hs - fs) or not (V - fs - hs)


def separating_count(E: Iterable[BoolFn], u: int, v: int) -> int:
    """How many members take different values at ``u`` and ``v``."""
    return sum(1 for f in E if f(u) != f(v))


# -- generated rings ----------------------------------------------------------

def atoms(vertices: Sequence[int], gens: Iterable[BoolFn]) -> list[frozenset[int]]:
    """Cells of the partition of ``vertices`` by membership pattern."""
    gens = list(gens)
    cells: dict[tuple, list[int]] = {}
    for v in vertices:
        cells.setdefault(tuple(v in f.support for f in gens), []).append(v)
    return sorted((frozenset(c) for c in cells.values()), key=lambda c: min(c))


def _ring_atoms(gens: Sequence[BoolFn]) -> list[frozenset[int]]:
    # the all-zero pattern cell is not in the generated ring (no unit)
    universe = sorted(set().union(*(f.support for f in gens))) if gens else []
    return atoms(universe, gens)


def in_subring(gens: Sequence[BoolFn], f: BoolFn) -> bool:
    universe = set().union(*(h.support for h in gens)) if gens else set()
    if not f.support <= universe:
        return False
    for cell in _ring_atoms(gens):
        inside = cell & f.support
        if inside and inside != cell:
            return False
    return True


def subring_closure(gens: Iterable[BoolFn], cap: int = DEFAULT_CLOSURE_CAP) -> frozenset[BoolFn]:
    """Least set containing ``gens`` closed under ``+`` and ``*``.

    Its elements are the unions of atoms of the generators (the empty union
    being 0), so the size is ``2 ** #atoms``; that is checked against
    ``cap`` before anything is materialised.
    """
    gens = list(gens)
    cells = _ring_atoms(gens)
    size = 1 << len(cells)
    if size > cap:
        raise ClosureCapExceeded(size, cap)
    out = set()
    for mask in product((False, True), repeat=len(cells)):
        out.add(BoolFn(frozenset().union(*(c for c, on in zip(cells, mask) if on))))
    return frozenset(out)


# -- bonds ----------------------------------------------------------------------

def _side_without(g: Graph, start: int, removed: set[Edge]) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b not in seen and edge(a, b) not in removed:
                seen.add(b)
                queue.append(b)
    return seen


def _path_without(g: Graph, u: int, v: int, removed: set[Edge]) -> list[int] | None:
    parent = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for b in sorted(g.neighbors(a)):
            if b not in parent and edge(a, b) not in removed:
                parent[b] = a
                queue.append(b)
    if v not in parent:
        return None
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def min_cut_sides(g: Graph, u: int, v: int, k: int, removed: frozenset[Edge] = frozenset()) -> set[frozenset[int]]:
    """Vertex sets ``X`` containing ``u`` but not ``v`` with ``X`` and
    ``V \\ X`` connected and ``|dX| <= k`` (edges in ``removed`` also count
    toward ``dX`` and the budget)."""
    found: set[frozenset[int]] = set()
    base = set(removed)

    def rec(cut: set[Edge], budget: int) -> None:
        path = _path_without(g, u, v, cut)
        if path is None:
            X = frozenset(_side_without(g, u, cut))
            dX = g.boundary(X)
            if len(dX) <= k and len(_side_without(g, v, set(dX))) == len(g) - len(X):
                found.add(X)
            return
        if budget == 0:
            return
        for i in range(len(path) - 1):
            e = edge(path[i], path[i + 1])
            cut.add(e)
            rec(cut, budget - 1)
            cut.discard(e)

    rec(base, k - len(base))
    return found


def bond_sides(g: Graph, n: int) -> set[frozenset[int]]:
    """All ``X`` with ``X`` and its complement non-empty and connected and
    ``|dX| <= n`` (``g`` connected).  Both sides of each bond are listed."""
    out: set[frozenset[int]] = set()
    if n < 1:
        return out
    V = frozenset(g.vertices)
    for a, b in sorted(g.edges):
        for X in min_cut_sides(g, a, b, n, frozenset({(a, b)})):
            out.add(X)
            out.add(V - X)
    return out


def elements_up_to(g: Graph, n: int) -> list[BoolFn]:
    """Every element with ``|df| <= n``, by subset enumeration (small graphs)."""
    if len(g) > 22:
        raise ValueError("exhaustive element enumeration is limited to 22 vertices")
    vs = g.vertices
    out = []
    for mask in range(1 << len(vs)):
        sup = frozenset(v for i, v in enumerate(vs) if mask >> i & 1)
        if len(g.boundary(sup)) <= n:
            out.append(BoolFn(sup))
    return sorted(out, key=BoolFn.key)


# -- thin elements --------------------------------------------------------------

@dataclass(frozen=True)
class ThinCertificate:
    """``f`` is ``n``-thin: ``|df| = n`` and ``f`` separates two vertices that
    no ``n - 1`` edges can separate, so ``f`` is not a union of atoms of
    ``B_{n-1}``."""

    f: BoolFn
    n: int
    witness: tuple[int, int]

    def replay(self, g: Graph) -> bool:
        x, y = self.witness
        if len(coboundary(g, self.f)) != self.n or self.f(x) == self.f(y):
            return False
        value, _ = min_edge_cut(g, [x], [y])
        return value >= self.n


def lower_atoms(g: Graph, n: int) -> list[frozenset[int]]:
    """Atoms of ``B_n``: classes of vertices no ``n`` edges separate."""
    gens = [one(g)] + [BoolFn(X) for X in sorted(bond_sides(g, n), key=lambda X: sorted(X))]
    return atoms(g.vertices, gens)


def is_thin(g: Graph, f: BoolFn, n: int, _atoms: list[frozenset[int]] | None = None) -> ThinCertificate | None:
    """A certificate if ``f`` is ``n``-thin, else ``None``."""
    if len(coboundary(g, f)) != n or n < 1:
        return None
    cells = _atoms if _atoms is not None else lower_atoms(g, n - 1)
    for cell in cells:
        ones = cell & f.support
        if ones and ones != cell:
            return ThinCertificate(f, n, (min(ones), min(cell - ones)))
    return None


def thin_elements(g: Graph, n: int) -> list[BoolFn]:
    """All ``n``-thin elements (thin elements are bond sides)."""
    cells = lower_atoms(g, n - 1)
    out = []
    for X in bond_sides(g, n):
        f = BoolFn(X)
        if is_thin(g, f, n, cells) is not None:
            out.append(f)
    return sorted(out, key=BoolFn.key)


def thin_separating(g: Graph, n: int, u: int, v: int) -> list[BoolFn]:
    """Thin elements of ``B_n`` that take different values at ``u`` and ``v``."""
    if u == v:
        return []
    V = frozenset(g.vertices)
    candidates = set()
    for X in min_cut_sides(g, u, v, n):
        candidates.add(X)
        candidates.add(V - X)
    cells_by_order: dict[int, list[frozenset[int]]] = {}
    out = []
    for X in candidates:
        f = BoolFn(X)
        m = len(g.boundary(X))
        if m not in cells_by_order:
            cells_by_order[m] = lower_atoms(g, m - 1)
        if is_thin(g, f, m, cells_by_order[m]) is not None:
            out.append(f)
    return sorted(out, key=BoolFn.key)


# -- Dicks-Dunwoody ---------------------------------------------------------------

def dicks_dunwoody_elements(g: Graph, k: int) -> list[BoolFn]:
    """Nested thin generators of ``B_k`` built order by order.

    At order ``n`` the candidates are the ``n``-thin elements nested with
    everything chosen so far; a greedy maximal independent set of the
    "not nested" conflict graph, in canonical order, is adjoined.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    chosen: list[BoolFn] = []
    for n in range(1, k + 1):
        cands = [f for f in thin_elements(g, n) if all(corners_nested(g, f, h) for h in chosen)]
        kernel: list[BoolFn] = []
        for f in cands:
            if all(corners_nested(g, f, h) for h in kernel):
                kernel.append(f)
        chosen.extend(kernel)
    return chosen


def dicks_dunwoody_generators(g: Graph, k: int) -> list[Separation]:
    """The Dicks-Dunwoody generators as separations (via the inverse of
    :func:`psi`)."""
    return [psi_inv(g, f) for f in dicks_dunwoody_elements(g, k)]
