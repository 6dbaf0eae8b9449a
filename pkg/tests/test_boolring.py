import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from sepforest import corpus
from sepforest.boolring import (
    BoolFn,
    ClosureCapExceeded,
    ConstantFunction,
    bond_sides,
    coboundary,
    corners_nested,
    dicks_dunwoody_elements,
    dicks_dunwoody_generators,
    elements_up_to,
    in_subring,
    is_thin,
    lower_atoms,
    nested_boolfns,
    one,
    psi,
    psi_inv,
    separating_count,
    subring_closure,
    thin_elements,
    thin_separating,
    zero,
)
from sepforest.graph import cycle_graph, path_graph
from sepforest.separations import enumerate_separations, make, nested

SMALL = corpus.corpus(max_vertices=8)
TINY = corpus.corpus(max_vertices=7)


def ids(x):
    return x if isinstance(x, str) else ""


def supports(n):
    return st.frozensets(st.integers(0, n - 1)).map(BoolFn)


# -- ring laws --------------------------------------------------------------------

@given(supports(8), supports(8), supports(8))
def test_ring_laws(f, g, h):
    assert f + g == g + f and f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + f == zero() and f + zero() == f
    assert f * f == f


@given(supports(8))
def test_star_is_adding_one(f):
    g = path_graph(8)
    assert f.star(g) == one(g) + f
    assert f.star(g).star(g) == f
    assert coboundary(g, f.star(g)) == coboundary(g, f)


# -- the map to and from separations ------------------------------------------------

@pytest.mark.parametrize("name,g", SMALL, ids=ids)
def test_psi_inverse_then_psi_is_identity(name, g):
    for f in elements_up_to(g, 3):
        if not coboundary(g, f):
            with pytest.raises(ConstantFunction):
                psi_inv(g, f)
            continue
        s = psi_inv(g, f)
        assert s.B == coboundary(g, f)
        assert psi(g, s) == f


@pytest.mark.parametrize("name,g", SMALL, ids=ids)
def test_psi_then_inverse_is_identity_on_tight_separations(name, g):
    for s in enumerate_separations(g, 3):
        f = psi(g, s)
        assert coboundary(g, f) == s.B
        assert s.S <= f.support
        tight = bool(s.B) and all(any(v in e for e in s.B) for v in s.S)
        if tight:
            assert psi_inv(g, f) == s


def test_separation_with_empty_cut_maps_to_a_constant():
    g = path_graph(3)
    f = psi(g, make(g, {1}, []))
    assert f == one(g)
    with pytest.raises(ConstantFunction):
        psi_inv(g, f)


def test_crossing_square_separations_have_nested_images():
    # the images only remember the second sides, which are nested here
    g = cycle_graph(4)
    s = make(g, {0, 2}, [(0, 3), (2, 3)])
    t = make(g, {1, 3}, [(1, 2), (2, 3)])
    assert not nested(g, s, t)
    assert psi(g, s).support == {0, 1, 2} and psi(g, t).support == {0, 1, 3}
    assert corners_nested(g, psi(g, s), psi(g, t))


@given(supports(7), supports(7))
def test_literal_nestedness_test_covers_corners_after_complementing(f, h):
    g = cycle_graph(7)
    literal = any(nested_boolfns(g, a, b) for a in (f, f.star(g)) for b in (h, h.star(g)))
    assert corners_nested(g, f, h) == literal
    assert corners_nested(g, f, h) == corners_nested(g, h, f)
    if nested_boolfns(g, f, h):
        assert corners_nested(g, f, h)


def test_separating_count():
    fs = [BoolFn.of({0}), BoolFn.of({0, 1}), BoolFn.of({2})]
    assert separating_count(fs, 0, 1) == 1
    assert separating_count(fs, 0, 2) == 3


# -- generated rings ----------------------------------------------------------------

@given(st.lists(supports(9), max_size=5))
@settings(max_examples=80)
def test_closure_matches_saturation(gens):
    vs = list(range(9))
    got = {oracles.to_mask(vs, f.support) for f in subring_closure(gens)}
    brute = oracles.ring_closure([oracles.to_mask(vs, f.support) for f in gens])
    assert got == brute | {0}
    for m in brute:
        assert in_subring(gens, BoolFn.of(v for v in vs if m >> v & 1))


def test_closure_cap_is_enforced():
    gens = [BoolFn.of({i}) for i in range(20)]
    with pytest.raises(ClosureCapExceeded) as info:
        subring_closure(gens, cap=1 << 10)
    assert info.value.size == 1 << 20


@pytest.mark.parametrize("name,g", TINY, ids=ids)
def test_bond_sides_are_connected_small_cuts(name, g):
    V = frozenset(g.vertices)
    vs, masks = oracles.small_coboundary_masks(g, 3)
    want = set()
    for m in masks:
        X = frozenset(v for i, v in enumerate(vs) if m >> i & 1)
        if X and X != V and oracles.reach(g, min(X), set(X)) == X and oracles.reach(g, min(V - X), set(V - X)) == V - X:
            want.add(X)
    assert bond_sides(g, 3) == want


@pytest.mark.parametrize("name,g", TINY, ids=ids)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_thin_elements_match_definition(name, g, n):
    vs, lower = oracles.small_coboundary_masks(g, n - 1)
    ring = oracles.ring_closure(lower)
    want = set()
    for m in range(1 << len(vs)):
        X = frozenset(v for i, v in enumerate(vs) if m >> i & 1)
        if len(oracles.boundary(g, X)) == n and m not in ring:
            want.add(X)
    got = thin_elements(g, n)
    assert {f.support for f in got} == want
    atoms_ = lower_atoms(g, n - 1)
    for f in got:
        cert = is_thin(g, f, n, atoms_)
        assert cert is not None and cert.replay(g)


@pytest.mark.parametrize("name", ["C6", "grid2x3", "theta3x2", "K4e"])
def test_thin_separating_is_a_filter_of_thin_elements(name):
    g = corpus.get(name)
    for u, v in combinations(g.vertices, 2):
        got = thin_separating(g, 3, u, v)
        want = [f for n in (1, 2, 3) for f in thin_elements(g, n) if f(u) != f(v)]
        assert sorted(got, key=BoolFn.key) == sorted(want, key=BoolFn.key)


# -- Dicks-Dunwoody --------------------------------------------------------------------

DD_GRAPHS = corpus.corpus(max_vertices=10)


@pytest.mark.parametrize("name,g", DD_GRAPHS, ids=ids)
def test_dicks_dunwoody_generators_are_nested_thin_and_generate(name, g):
    elems = dicks_dunwoody_elements(g, 2)
    for f, h in combinations(elems, 2):
        assert corners_nested(g, f, h)
    for f in elems:
        n = len(coboundary(g, f))
        assert is_thin(g, f, n) is not None
    gens = elems + [one(g)]
    for f in elements_up_to(g, 2):
        assert in_subring(gens, f) or f == zero()


def test_dicks_dunwoody_on_a_tree_keeps_both_sides_of_each_edge():
    g = corpus.binary_tree(2)
    elems = dicks_dunwoody_elements(g, 1)
    assert len(elems) == 2 * g.number_of_edges()
    seps = dicks_dunwoody_generators(g, 1)
    assert all(len(s.S) == 1 and len(s.B) == 1 for s in seps)


def test_dicks_dunwoody_rejects_order_zero():
    with pytest.raises(ValueError):
        dicks_dunwoody_elements(path_graph(3), 0)


def test_element_enumeration_is_bounded():
    with pytest.raises(ValueError):
        elements_up_to(path_graph(23), 1)


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_dicks_dunwoody_on_random_graphs(seed):
    rng = random.Random(seed)
    g = corpus.random_connected(rng.randint(4, 9), rng.randint(0, 5), seed)
    elems = dicks_dunwoody_elements(g, 2)
    assert all(corners_nested(g, f, h) for f, h in combinations(elems, 2))
    gens = elems + [one(g)]
    assert all(in_subring(gens, f) or f == zero() for f in elements_up_to(g, 2))
