from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepforest import corpus
from sepforest.cli import main
from sepforest.graph import Graph
from sepforest.io import FormatError, dot_graph, dot_levels, dot_td, format_edge_list, format_level_tree, parse_edge_list, read_graph
from sepforest.levels import glue_pipeline
from sepforest.treedecomp import parse_td, validate_tree_decomposition
from sepforest.tutte import tutte_decomposition

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- edge lists and DOT -------------------------------------------------------------------

@pytest.mark.parametrize("name,g", corpus.corpus(), ids=lambda x: x if isinstance(x, str) else "")
def test_edge_list_roundtrip(name, g):
    assert parse_edge_list(format_edge_list(g, ["c"])) == g


@given(st.integers(1, 12), st.lists(st.tuples(st.integers(0, 11), st.integers(0, 11)), max_size=20))
def test_edge_list_roundtrip_with_isolated_vertices(n, pairs):
    g = Graph(range(n), [(a, b) for a, b in pairs if a != b])
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["0 x\n", "1 1\n", "0 1 2\n", "-1 2\n"])
def test_edge_list_errors_name_the_line(text):
    with pytest.raises(FormatError) as info:
        parse_edge_list("# header\n" + text)
    assert "line 2" in str(info.value)


def test_read_graph(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0 1\n1 2\n")
    assert read_graph(path).sorted_edges() == [(0, 1), (1, 2)]


def test_dot_output():
    g = corpus.get("K4e")
    assert "0 -- 1;" in dot_graph(g)
    td = tutte_decomposition(g)
    text = dot_td(td)
    assert 'b1 [label="{b1|{0|1|2}}"];' in text and "b1 -- b2;" in text
    z, tree, _ = glue_pipeline(g, td)
    dz = dot_levels(z, tree)
    assert dz.count("fillcolor=") == 6 and dz.count(" -- ") == 5
    assert format_level_tree(z, tree).startswith("# point 0 (0,0)\n")


# -- command line ----------------------------------------------------------------------

def test_tutte_matches_golden(capsys):
    code, out, _ = run(capsys, "tutte", "--gen", "K4e")
    assert code == 0
    assert out == (GOLDEN / "k4e_tutte.td").read_text()


def test_glue_and_cover_match_golden(capsys):
    assert run(capsys, "glue", "--gen", "K4e")[1] == (GOLDEN / "k4e_glue.txt").read_text()
    assert run(capsys, "cover", "--gen", "K4", "--flip", "0")[1] == (GOLDEN / "k4_cover_flip0.txt").read_text()


@pytest.mark.parametrize("name", ["K4e", "bowtie", "grid3x3", "C6", "tree12"])
@pytest.mark.parametrize("verb", ["tutte", "decompose"])
def test_decompositions_parse_and_validate(capsys, name, verb):
    code, out, _ = run(capsys, verb, "--gen", name)
    assert code == 0
    g = corpus.get(name)
    assert validate_tree_decomposition(g, parse_td(out, g)).ok


def test_decompose_with_given_separations(tmp_path, capsys):
    seps = tmp_path / "seps.txt"
    seps.write_text("# one split\nS: 0,1 | B: (0,2),(1,2)\n")
    code, out, _ = run(capsys, "decompose", "--gen", "K4e", "--seps", str(seps))
    assert code == 0
    assert "b 1 0 1 2" in out and "b 2 0 1 3" in out


def test_decompose_rejects_crossing_separations(tmp_path, capsys):
    seps = tmp_path / "seps.txt"
    seps.write_text("S: 0,2 | B: (0,1),(1,2)\nS: 1,3 | B: (1,2),(2,3)\n")
    code, _, err = run(capsys, "decompose", "--gen", "C4", "--seps", str(seps))
    assert code == 1 and "error" in err


def test_basis_counts(capsys):
    code, out, _ = run(capsys, "basis", "--gen", "Q3")
    assert code == 0
    assert out.splitlines()[0] == "# 2-basis: 5 cycles, cycle space dimension 5"
    assert len(out.splitlines()) == 6


def test_ends_of_scaled_squares(capsys):
    code, out, _ = run(capsys, "ends", "--gen", "scaled_squares", "--radius", "6")
    assert code == 0
    assert out.splitlines()[-1] == "ends>=2, min-cut=4"


def test_levels_with_given_decomposition(tmp_path, capsys):
    td = tmp_path / "k4e.td"
    td.write_text((GOLDEN / "k4e_tutte.td").read_text())
    code, out, _ = run(capsys, "levels", "--gen", "K4e", "--td", str(td))
    assert code == 0 and "# point 5 (3,1)" in out
    assert run(capsys, "glue", "--gen", "K4e", "--minor")[0] == 0


def test_input_from_file_and_output_file(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text(format_edge_list(corpus.get("W5")))
    dest = tmp_path / "out.txt"
    code, out, _ = run(capsys, "analyze", "--in", str(src), "--out", str(dest))
    assert code == 0 and out == ""
    text = dest.read_text()
    assert "connectivity 3" in text and "planar yes" in text


def test_generate_and_list(capsys):
    code, out, _ = run(capsys, "generate", "--gen", "random_tree:10:3")
    assert code == 0
    assert parse_edge_list(out) == corpus.random_tree(10, 3)
    assert parse_edge_list(run(capsys, "generate", "--gen", "random_tree(10,3)")[1]) == parse_edge_list(out)
    assert "grid2d" in run(capsys, "list")[1]
    assert "--" in run(capsys, "generate", "--gen", "C4", "--dot")[1]


def test_output_is_deterministic_and_ignores_threads(capsys):
    first = run(capsys, "analyze", "--gen", "grid3x3")[1]
    assert run(capsys, "analyze", "--gen", "grid3x3", "--threads", "4")[1] == first


@pytest.mark.parametrize("argv", [
    ["tutte"],
    ["tutte", "--gen", "grid2d"],
    ["tutte", "--gen", "C4", "--in", "x"],
    ["ends", "--gen", "K4"],
    ["tutte", "--gen", "C4", "--threads", "0"],
    ["nosuchverb"],
])
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


@pytest.mark.parametrize("argv", [
    ["basis", "--gen", "K33"],
    ["cover", "--gen", "C5"],
    ["decompose", "--gen", "C4", "--order-cap", "5"],
    ["levels", "--in", "/nonexistent/file"],
    ["decompose", "--gen", "grid4x6"],
])
def test_precondition_failures_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith(f"sepforest {argv[0]}: error:")
