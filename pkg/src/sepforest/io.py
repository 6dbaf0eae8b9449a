"""Edge-list text, DOT export and the text form of glued level trees."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError
from .levels import LevelSpace, format_point
from .treedecomp import TreeDecomposition


class FormatError(GraphError):
    pass


def parse_edge_list(text: str) -> Graph:
    """``#`` comment lines, then one ``u v`` pair per line.

    A line holding a single id declares an isolated vertex.
    """
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise FormatError(f"line {lineno}: vertex ids must be decimal integers: {raw!r}") from None
        if any(i < 0 for i in ids):
            raise FormatError(f"line {lineno}: negative vertex id: {raw!r}")
        if len(ids) == 2:
            if ids[0] == ids[1]:
                raise FormatError(f"line {lineno}: self-loop at {ids[0]}")
            edges.append((ids[0], ids[1]))
        elif len(ids) == 1:
            vertices.append(ids[0])
        else:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
    return Graph(vertices, edges)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    lines.extend(str(v) for v in g.vertices if g.degree(v) == 0)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


# -- DOT ----------------------------------------------------------------------------

_PALETTE = ("lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan", "wheat")


def dot_graph(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_td(td: TreeDecomposition, name: str = "TD") -> str:
    """Bags as record nodes ``b<id>`` (ids from 1), tree edges between them."""
    lines = [f"graph {name} {{", "  node [shape=record];"]
    for t, bag in enumerate(td.bags):
        fields = "|".join(str(v) for v in sorted(bag)) or " "
        lines.append(f'  b{t + 1} [label="{{b{t + 1}|{{{fields}}}}}"];')
    lines.extend(f"  b{a + 1} -- b{b + 1};" for a, b in td.tree.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_levels(z: LevelSpace, g: Graph | None = None, name: str = "Z") -> str:
    """Level points filled with one colour per level; ``g`` is an optional
    graph on point ids (for example a glued tree) drawn as edges."""
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for pid, (x, t) in enumerate(z.points):
        colour = _PALETTE[t % len(_PALETTE)]
        lines.append(f'  p{pid} [label="{format_point((x, t))}", fillcolor={colour}];')
    if g is not None:
        lines.extend(f"  p{a} -- p{b};" for a, b in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- glued trees --------------------------------------------------------------------

def format_level_tree(z: LevelSpace, tree: Graph) -> str:
    """Edge list on point ids preceded by a ``# point <id> (x,t)`` block."""
    comments = [f"point {pid} {format_point(pt)}" for pid, pt in enumerate(z.points)]
    return format_edge_list(tree, comments)
