import networkx as nx
import pytest

import oracles
from sepforest import squares
from sepforest.boolring import psi, separating_count
from sepforest.ends import (
    NotInInterior,
    accessibility_cut,
    end_count_profile,
    end_spectrum,
    refinement,
    separates_end_pair,
    thick_end_estimate,
    truncation_graph,
)
from sepforest.lazy import ball, biinfinite_path, grid2d, ladder, regular_tree, scaled_squares
from sepforest.separations import make
from sepforest.treedecomp import check_property_star, make_system


def annulus_count(lazy, r, margin):
    """Components of the vertices at distance >= r that reach distance r + margin."""
    trunc = ball(lazy, lazy.basepoint, r + margin)
    keep = {v for v, d in trunc.dist.items() if d >= r}
    seen, count = set(), 0
    for v in sorted(keep):
        if v in seen:
            continue
        comp = oracles.reach(trunc.graph, v, keep)
        seen |= comp
        count += any(trunc.dist[w] == r + margin for w in comp)
    return count


def flow_cut(g, sources, sinks):
    h = nx.Graph(list(g.edges))
    for s in sources:
        h.add_edge("src", s)
    for t in sinks:
        h.add_edge(t, "snk")
    nx.set_edge_attributes(h, 1, "capacity")
    for s in sources:
        h["src"][s]["capacity"] = len(g.edges) + 1
    for t in sinks:
        h[t]["snk"]["capacity"] = len(g.edges) + 1
    return nx.maximum_flow_value(h, "src", "snk")


@pytest.mark.parametrize("lazy", [biinfinite_path(), grid2d(), ladder(), regular_tree(3), scaled_squares()], ids=repr)
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_end_counts_match_annulus_search(lazy, r):
    assert len(end_spectrum(lazy, r)) == annulus_count(lazy, r, 2)


@pytest.mark.parametrize("r", range(3, 11))
def test_line_has_two_ends_and_cut_one(r):
    lazy = biinfinite_path()
    es = end_spectrum(lazy, r)
    assert len(es) == 2
    assert accessibility_cut(lazy, es[0], es[1], r + 2).value == 1


@pytest.mark.parametrize("r", range(1, 7))
def test_cubic_tree_end_count_formula(r):
    lazy = regular_tree(3)
    assert len(end_spectrum(lazy, r)) == 3 * 2 ** (r - 1) == oracles.tree_ball_sphere_size(3, r)


def test_cubic_tree_refinement_is_two_to_one():
    ref = refinement(regular_tree(3), 3)
    assert len(ref) == 24
    counts = {}
    for parent in ref.values():
        counts[parent] = counts.get(parent, 0) + 1
    assert set(counts.values()) == {2}


def test_grid_has_one_thick_end():
    lazy = grid2d()
    assert end_count_profile(lazy, range(1, 6)) == {r: 1 for r in range(1, 6)}
    (e,) = end_spectrum(lazy, 3)
    assert thick_end_estimate(lazy, e, 5, 12)
    # the radius-one sphere has only four vertices
    assert not thick_end_estimate(lazy, end_spectrum(lazy, 1)[0], 5, 12)


def test_ladder_end_is_thin_at_three_paths():
    lazy = ladder()
    for e in end_spectrum(lazy, 3):
        assert thick_end_estimate(lazy, e, 2, 8)
        assert not thick_end_estimate(lazy, e, 3, 8)


@pytest.mark.parametrize("r", range(3, 7))
def test_scaled_squares_two_ends_cut_four(r):
    lazy = scaled_squares()
    es = end_spectrum(lazy, r)
    assert len(es) == 2
    report = accessibility_cut(lazy, es[0], es[1], r + 2)
    assert report.value == 4 and not report.merged
    trunc = es[0].truncation
    assert flow_cut(trunc.graph, es[0].outer, es[1].outer) == 4


def test_scaled_squares_small_radius_sees_one_end():
    assert len(end_spectrum(scaled_squares(), 2)) == 1


def test_separation_of_the_line_separates_its_ends():
    lazy = biinfinite_path()
    es = end_spectrum(lazy, 3)
    g = es[0].truncation.graph
    b = lazy.basepoint
    nb = min(g.neighbors(b))
    sep = make(g, {b}, [tuple(sorted((b, nb)))])
    assert separates_end_pair(sep, es[0], es[1])
    assert not separates_end_pair(sep, es[0], es[0])
    far = max(g.vertices, key=lambda v: es[0].truncation.dist[v])
    with pytest.raises(NotInInterior):
        separates_end_pair(make(g, {far}, [tuple(sorted((far, min(g.neighbors(far)))))]), es[0], es[1])


def test_argument_checks():
    with pytest.raises(ValueError):
        end_spectrum(grid2d(), 0)
    with pytest.raises(ValueError):
        end_spectrum(grid2d(), 2, margin=0)
    es = end_spectrum(biinfinite_path(), 3)
    with pytest.raises(ValueError):
        accessibility_cut(biinfinite_path(), es[0], es[0], 5)
    with pytest.raises(ValueError):
        thick_end_estimate(grid2d(), end_spectrum(grid2d(), 3)[0], 2, 3)
    assert len(truncation_graph(grid2d(), 2)) == 13


# -- the chain of cycles in the scaled-squares graph ------------------------------------

@pytest.mark.parametrize("R", range(2, 8))
def test_chain_fits_radius_minus_two_members(R):
    trunc = squares.truncation(R)
    chain = squares.chain_members(trunc)
    assert len(chain) == max(R - 2, 0)
    if chain:
        assert check_property_star(make_system(chain, trunc.graph)).ok


def test_chain_separating_count_grows_with_radius():
    counts = []
    for R in range(2, 6):
        trunc = squares.truncation(R)
        fs = [psi(trunc.graph, s) for s in squares.chain_members(trunc)]
        counts.append(separating_count(fs, squares.point(4, 4), squares.point(1, 1)))
    assert counts == [0, 1, 2, 3]


def test_ring_members_are_nested_chains():
    counts = []
    for R in range(2, 9):
        trunc = squares.truncation(R)
        rings = squares.ring_members(trunc)
        counts.append(len(rings))
        if rings:
            report = check_property_star(make_system(rings, trunc.graph))
            assert report.ok and report.longest_chain == len(rings)
    assert counts == [0, 0, 1, 3, 5, 7, 9]
