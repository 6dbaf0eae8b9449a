from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from sepforest import corpus
from sepforest.graph import GraphError, complete_graph, cycle_graph, edge
from sepforest.planar import (
    InvalidRotation,
    NotPlanar,
    RotationSystem,
    combinatorially_equivalent,
    component_cocycles,
    cycle_pair,
    double_cover,
    euler_characteristic,
    exhaustive_rotations,
    faces,
    format_rotation,
    is_local_isomorphism,
    is_planar,
    is_spherical,
    kuratowski_kind,
    local_rotations,
    parse_rotation,
    rotation_choice,
    spherical_cocycle,
    two_basis,
    verify_two_basis,
)


def ids(x):
    return x if isinstance(x, str) else ""


def rotation_count(g):
    return prod(factorial(max(g.degree(v) - 1, 0)) for v in g.vertices)


BRUTE = [(n, g) for n, g in corpus.corpus() if g.is_connected() and rotation_count(g) <= 50_000]
THREE_CONNECTED_PLANAR = corpus.three_connected_planar(max_vertices=12)
TWO_CONNECTED_PLANAR = corpus.two_connected_planar()


# -- planarity ------------------------------------------------------------------

@pytest.mark.parametrize("name,g", BRUTE, ids=ids)
def test_planarity_matches_exhaustive_search(name, g):
    res = is_planar(g)
    assert res.planar == bool(oracles.spherical_rotations(g))
    if res.planar:
        assert oracles.count_faces(g, res.rotation.as_dict()) == 2 - len(g) + g.number_of_edges()


@pytest.mark.parametrize("name,g", corpus.corpus(), ids=ids)
def test_embedding_or_obstruction_is_certified(name, g):
    res = is_planar(g)
    if res.planar:
        assert not g.is_connected() or is_spherical(g, res.rotation)
    else:
        w = res.witness
        assert w.subgraph.edges <= g.edges
        assert kuratowski_kind(w.subgraph) == w.kind


def test_kuratowski_graphs():
    assert is_planar(complete_graph(5)).witness.kind == "K5"
    assert is_planar(corpus.get("K33")).witness.kind == "K3,3"
    assert not is_planar(corpus.get("petersen"))
    assert kuratowski_kind(cycle_graph(5)) is None
    with pytest.raises(NotPlanar):
        two_basis(corpus.get("K33"))


def test_faces_of_a_cube():
    g = corpus.get("Q3")
    fs = faces(g, is_planar(g).rotation)
    assert len(fs) == 6 and all(len(f.darts) == 4 for f in fs)
    assert euler_characteristic(g, is_planar(g).rotation) == 2


def test_rotation_checks_and_text_form():
    g = complete_graph(4)
    rs = rotation_choice(g)
    assert parse_rotation(format_rotation(rs)) == rs
    with pytest.raises(InvalidRotation):
        RotationSystem.of({0: [1, 2], 1: [0, 2, 3], 2: [0, 1, 3], 3: [1, 2]}).check(g)
    with pytest.raises(ValueError):
        parse_rotation("0: 1 2 x\n")


# -- uniqueness for 3-connected planar graphs ----------------------------------------

@pytest.mark.parametrize("name,g", [(n, g) for n, g in THREE_CONNECTED_PLANAR if rotation_count(g) <= 50_000], ids=ids)
def test_three_connected_planar_graphs_have_two_mirror_embeddings(name, g):
    found = [RotationSystem.of(r) for r in oracles.spherical_rotations(g)]
    assert len(found) == 2
    assert combinatorially_equivalent(found[0], found[1])
    assert found[0] == found[1].reversed()
    assert rotation_choice(g) in found
    assert sorted(rs.key() for rs in exhaustive_rotations(g)) == sorted(rs.key() for rs in found)


def test_local_rotations_of_a_wheel_hub():
    g = corpus.get("W5")
    hub = max(g.vertices, key=g.degree)
    local = local_rotations(g, hub)
    assert len(local) == 2
    a, b = sorted(local)
    assert RotationSystem.of({hub: a[::-1]}).at(hub) == b


def test_exhaustive_rotations_respects_cap():
    with pytest.raises(ValueError):
        list(exhaustive_rotations(corpus.get("W8"), cap=1000))


# -- 2-bases ---------------------------------------------------------------------------

@pytest.mark.parametrize("name,g", TWO_CONNECTED_PLANAR, ids=ids)
def test_two_basis_is_simple_generating_and_minimal(name, g):
    basis = two_basis(g)
    report = verify_two_basis(g, basis)
    assert report.ok and report.simple and report.generating
    dim = g.number_of_edges() - len(g) + 1
    assert len(basis) == dim
    assert oracles.gf2_rank(list(basis.cycles)) == dim
    for i in range(len(basis)):
        rest = basis.cycles[:i] + basis.cycles[i + 1:]
        assert oracles.gf2_rank(list(rest)) < dim
        assert not verify_two_basis(g, rest).generating


def test_verify_two_basis_reports_overused_edges():
    g = corpus.get("K4")
    cycles = list(two_basis(g).cycles)
    report = verify_two_basis(g, cycles + [cycles[0], cycles[0]])
    assert not report.simple and not report.ok
    assert not verify_two_basis(g, [frozenset({(0, 1), (1, 2)})]).ok


def test_two_basis_needs_two_connected_input():
    with pytest.raises(GraphError):
        two_basis(corpus.get("bowtie"))


# -- cocycle and double cover ---------------------------------------------------------

@pytest.mark.parametrize("name,g", THREE_CONNECTED_PLANAR, ids=ids)
def test_cycle_pair_gives_a_cycle_through_each_edge(name, g):
    for x, y in g.sorted_edges():
        a, b = cycle_pair(g, x, y)
        assert a[0] == b[0] == x and a[-1] == b[-1] == y
        assert not set(a[1:-1]) & set(b[1:-1])
        assert edge(x, y) not in {edge(p, q) for p, q in zip(a, a[1:])}


def flip_cocycle(g, flipped):
    return {(x, y): int((x in flipped) != (y in flipped)) for x, y in g.sorted_edges()}


@pytest.mark.parametrize("name,g", THREE_CONNECTED_PLANAR, ids=ids)
@given(data=st.data())
@settings(max_examples=8, deadline=None)
def test_cocycle_is_the_coboundary_of_the_flipped_set(name, g, data):
    flipped = data.draw(st.frozensets(st.sampled_from(g.vertices)))
    rs = rotation_choice(g).reversed_at(flipped)
    c = spherical_cocycle(g, rs.as_dict())
    assert c == flip_cocycle(g, flipped)
    cover = double_cover(g, rs.as_dict(), c)
    assert is_local_isomorphism(g, cover)
    comps = component_cocycles(cover)
    assert len(comps) == 2
    assert all(not any(cc.values()) for cc in comps)


def test_unrealisable_rotation_is_rejected():
    g = corpus.get("W5")
    rot = rotation_choice(g).as_dict()
    hub = max(g.vertices, key=g.degree)
    cyc = list(rot[hub])
    cyc[1], cyc[2] = cyc[2], cyc[1]
    rot[hub] = tuple(cyc)
    with pytest.raises(InvalidRotation):
        spherical_cocycle(g, rot)
    with pytest.raises(GraphError):
        spherical_cocycle(corpus.get("C5"), {v: () for v in range(5)})


def test_cover_of_a_consistent_rotation_is_two_copies():
    g = complete_graph(4)
    rs = rotation_choice(g)
    cover = double_cover(g, rs.as_dict(), {e: 0 for e in g.edges})
    assert sorted(len(c) for c in [set(v for v in cover.graph.vertices if v % 2 == i) for i in (0, 1)]) == [4, 4]
    assert not any(cover.graph.has_edge(u, v) for u in range(0, 8, 2) for v in range(1, 8, 2))
