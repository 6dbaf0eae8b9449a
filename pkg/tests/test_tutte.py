import random
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from sepforest import corpus
from sepforest.graph import Graph, GraphError, cycle_graph, k4_minus_edge, path_graph
from sepforest.separations import nested, sides
from sepforest.treedecomp import format_td, parse_td, torso, validate_tree_decomposition
from sepforest.tutte import (
    NotTwoConnected,
    TorsoClass,
    block_tutte_decomposition,
    blocks,
    classify_torso,
    torso_annotations,
    totally_nested,
    tutte_decomposition,
    two_separations,
    virtual_edge_paths,
)

GOLDEN = Path(__file__).parent / "golden"
TWO_CONNECTED = corpus.two_connected(max_vertices=14)


def ids(x):
    return x if isinstance(x, str) else ""


def test_golden_text_form_for_k4_minus_edge():
    td = tutte_decomposition(k4_minus_edge())
    text = format_td(td, torso_annotations(td))
    assert text == (GOLDEN / "k4e_tutte.td").read_text()
    assert parse_td(text, k4_minus_edge()) == td


@pytest.mark.parametrize("name,count", [("C5", 10), ("C6", 18), ("K4e", 2), ("K23", 6), ("K4", 0), ("Q3", 0)])
def test_two_separation_counts(name, count):
    assert len(two_separations(corpus.get(name))) == count


@pytest.mark.parametrize("name,g", corpus.two_connected(max_vertices=9), ids=ids)
def test_two_separations_match_definition(name, g):
    got = {(s.S, s.B) for s in two_separations(g)}
    everything = frozenset(g.vertices)
    want = set()
    for S, B in oracles.separations_by_definition(g, 2):
        if len(S) != 2:
            continue
        a1, a2 = oracles.sides_by_definition(g, S, B)
        if a1 != everything and a2 != everything:
            want.add((S, B))
    assert got == want


@pytest.mark.parametrize("name,g", TWO_CONNECTED, ids=ids)
def test_torsos_are_three_connected_cycles_or_edges(name, g):
    td = tutte_decomposition(g)
    assert validate_tree_decomposition(g, td).ok
    for t in td.nodes:
        h = torso(td, t).graph
        cls = classify_torso(h)
        if cls is TorsoClass.THREE_CONNECTED:
            # certified by brute force: no cut of at most two vertices
            assert len(h) >= 4 and not oracles.has_small_cut(h, 2)
        elif cls is TorsoClass.CYCLE:
            assert all(h.degree(v) == 2 for v in h.vertices) and h.is_connected()
        else:
            assert len(h) == 2 and h.number_of_edges() == 1
    assert virtual_edge_paths(td) is not None


@pytest.mark.parametrize("name,g", TWO_CONNECTED, ids=ids)
def test_three_connected_graphs_are_one_bag(name, g):
    td = tutte_decomposition(g)
    if not oracles.has_small_cut(g, 2):
        assert len(td.bags) == 1
    else:
        assert len(td.bags) >= 2 or classify_torso(g) is TorsoClass.CYCLE


def test_cycle_is_one_cycle_torso():
    g = cycle_graph(7)
    td = tutte_decomposition(g)
    assert len(td.bags) == 1
    assert torso_annotations(td) == ["c torso 1 Cycle"]


def test_system_is_totally_nested():
    g = corpus.get("theta3x2")
    seps = two_separations(g)
    chosen = totally_nested(seps, g)
    for s in chosen:
        assert all(nested(g, s, t) for t in seps)
    for s in set(seps) - set(chosen):
        assert any(not nested(g, s, t) for t in seps)


def test_virtual_edge_paths_avoid_the_part():
    g = corpus.get("grid3x3")
    td = tutte_decomposition(g)
    for (t, (a, b)), path in virtual_edge_paths(td).items():
        assert path[0] == a and path[-1] == b
        assert not set(path[1:-1]) & td.bags[t]
        assert all(g.has_edge(x, y) for x, y in zip(path, path[1:]))


def test_requires_two_connected_input():
    with pytest.raises(NotTwoConnected):
        tutte_decomposition(path_graph(4))
    with pytest.raises(NotTwoConnected):
        two_separations(corpus.get("bowtie"))
    with pytest.raises(NotTwoConnected):
        tutte_decomposition(Graph([0, 1, 2], [(0, 1)]))


def _nx(g):
    ng = nx.Graph(list(g.edges))
    ng.add_nodes_from(g.vertices)
    return ng


@pytest.mark.parametrize("name,g", corpus.corpus(), ids=ids)
def test_blocks_match_networkx(name, g):
    ng = _nx(g)
    want = {frozenset(c) for c in nx.biconnected_components(ng)}
    want |= {frozenset([v]) for v in g.vertices if g.degree(v) == 0}
    assert set(blocks(g)) == want


@given(st.integers(4, 16), st.integers(0, 8), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_block_tutte_decomposition_is_valid(n, extra, seed):
    g = corpus.random_connected(n, extra, seed)
    td = block_tutte_decomposition(g)
    assert validate_tree_decomposition(g, td).ok
    for b in blocks(g):
        assert frozenset().union(*(bag for bag in td.bags if bag <= b)) == b


def test_block_tutte_glues_at_cut_vertices():
    g = corpus.get("bowtie")
    td = block_tutte_decomposition(g)
    assert validate_tree_decomposition(g, td).ok
    assert sorted(map(sorted, td.bags)) == [[0, 1, 2], [0, 3, 4]]
    assert block_tutte_decomposition(k4_minus_edge()) == tutte_decomposition(k4_minus_edge())
    with pytest.raises(GraphError):
        block_tutte_decomposition(Graph([0, 1]))
