"""Command-line interface: ``sepforest <verb> [options]``.

Exit status is 0 on success, 1 when the input violates a precondition of
the requested computation, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections import Counter
from itertools import combinations
from pathlib import Path
from typing import Callable, Sequence

from . import corpus
from .boolring import ClosureCapExceeded, atoms, dicks_dunwoody_elements, psi_inv
from .connectivity import is_k_connected
from .ends import accessibility_cut, end_spectrum
from .gf2 import cycle_space_dimension
from .graph import Edge, Graph, GraphError
from .io import dot_graph, dot_levels, dot_td, format_edge_list, format_level_tree, parse_edge_list
from .lazy import GENERATORS, LazyGraph, ball, generator
from .levels import (
    glue_pipeline,
    level_space,
    levels_graph_L,
    minor_augmentation_A,
    torso_augmentation_A,
)
from .planar import (
    component_cocycles,
    double_cover,
    faces,
    is_local_isomorphism,
    is_planar,
    rotation_choice,
    spherical_cocycle,
    two_basis,
    verify_two_basis,
)
from .separations import format_separation, nested, parse_separation, proper_separations
from .treedecomp import TreeDecomposition, chm_tree, format_td, make_system, parse_td, validate_tree_decomposition
from .tutte import TorsoClass, block_tutte_decomposition, blocks, classify_all, torso_annotations

ENUMERATION_MAX_ORDER = 4
ENUMERATION_MAX_VERTICES = 20
RING_MAX_VERTICES = 22
END_PAIR_LIMIT = 16

_RANDOM = {
    "random_tree": corpus.random_tree,
    "random_connected": corpus.random_connected,
    "random_planar": corpus.random_planar,
}


class UsageError(Exception):
    pass


# -- inputs ----------------------------------------------------------------------------

def _parse_gen(text: str) -> tuple[str, list[int]]:
    """``name``, ``name:3:1`` or ``name(3,1)``."""
    m = re.fullmatch(r"([A-Za-z_][\w]*)\(([\d,\s]*)\)", text)
    if m:
        name, raw = m.group(1), [p for p in m.group(2).replace(" ", "").split(",") if p]
    else:
        name, *raw = text.split(":")
    try:
        return name, [int(p) for p in raw]
    except ValueError:
        raise UsageError(f"generator parameters must be integers: {text!r}") from None


def _finite_graph(args: argparse.Namespace) -> Graph:
    if args.input and args.gen:
        raise UsageError("give either --in or --gen, not both")
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return parse_edge_list(text)
    if args.gen:
        name, params = _parse_gen(args.gen)
        if name in _RANDOM:
            return _RANDOM[name](*params)
        if name in GENERATORS:
            if args.radius is None:
                raise UsageError(f"--radius is needed to truncate the infinite graph {name!r}")
            lazy = generator(name, *params)
            return ball(lazy, lazy.basepoint, args.radius).graph
        if params:
            raise UsageError(f"corpus graph {name!r} takes no parameters")
        return corpus.get(name)
    raise UsageError("an input graph is required (--in FILE or --gen NAME)")


def _lazy_graph(args: argparse.Namespace) -> LazyGraph:
    if not args.gen:
        raise UsageError("ends needs --gen NAME for an infinite graph")
    name, params = _parse_gen(args.gen)
    if name not in GENERATORS:
        raise UsageError(f"unknown infinite generator {name!r}; choose from {', '.join(sorted(GENERATORS))}")
    return generator(name, *params)


def _require_connected(g: Graph) -> None:
    if len(g) == 0 or not g.is_connected():
        raise GraphError("input graph must be connected and non-empty")


def _decomposition(args: argparse.Namespace, g: Graph) -> TreeDecomposition:
    if getattr(args, "td", None):
        td = parse_td(Path(args.td).read_text(), g)
        report = validate_tree_decomposition(g, td)
        if not report.ok:
            raise GraphError("invalid tree decomposition: " + "; ".join(report.problems))
        return td
    return block_tutte_decomposition(g)


# -- verbs -----------------------------------------------------------------------------

def cmd_decompose(args: argparse.Namespace) -> str:
    g = _finite_graph(args)
    _require_connected(g)
    if args.seps:
        lines = [ln for ln in Path(args.seps).read_text().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        seps = [parse_separation(ln, g) for ln in lines]
    else:
        k = args.order_cap
        if k > ENUMERATION_MAX_ORDER or len(g) > ENUMERATION_MAX_VERTICES:
            raise GraphError(
                f"separation enumeration is limited to order <= {ENUMERATION_MAX_ORDER} "
                f"and <= {ENUMERATION_MAX_VERTICES} vertices")
        pool = proper_separations(g, k)
        seps = [s for s in pool if all(nested(g, s, t) for t in pool)]
    td = chm_tree(make_system(seps, g), g)
    if args.dot:
        return dot_td(td)
    notes = [f"c sep {format_separation(s)}" for s in sorted(set(seps))]
    return format_td(td, notes)


def cmd_tutte(args: argparse.Namespace) -> str:
    g = _finite_graph(args)
    _require_connected(g)
    if len(g) < 2:
        raise GraphError("input graph needs at least one edge")
    td = block_tutte_decomposition(g)
    if args.dot:
        return dot_td(td)
    return format_td(td, torso_annotations(td))


def _cycle_vertices(cycle: frozenset[Edge]) -> list[int]:
    h = Graph((), cycle)
    start = min(h.vertices)
    walk = [start, min(h.neighbors(start))]
    while len(walk) < len(h):
        walk.append(next(w for w in sorted(h.neighbors(walk[-1])) if w != walk[-2]))
    return walk


def cmd_basis(args: argparse.Namespace) -> str:
    g = _finite_graph(args)
    _require_connected(g)
    basis = two_basis(g)
    report = verify_two_basis(g, basis)
    if not report.ok:
        raise GraphError("basis check failed: " + "; ".join(report.problems))
    lines = [f"# 2-basis: {len(basis.cycles)} cycles, cycle space dimension {cycle_space_dimension(g)}"]
    lines.extend(" ".join(map(str, _cycle_vertices(c))) for c in basis.cycles)
    return "\n".join(lines) + "\n"


def cmd_cover(args: argparse.Namespace) -> str:
    g = _finite_graph(args)
    _require_connected(g)
    flips = [int(v) for v in args.flip.split(",") if v.strip()] if args.flip else []
    if not set(flips) <= set(g.vertices):
        raise GraphError("--flip names vertices that are not in the graph")
    rs = rotation_choice(g).reversed_at(flips)
    rotations = rs.as_dict()
    c = spherical_cocycle(g, rotations)
    cover = double_cover(g, rotations, c)
    comps = component_cocycles(cover)
    coherent = all(not any(cc.values()) for cc in comps)
    lines = [
        "# double cover: vertex (x,i) has id 2x+i",
        f"# components {len(comps)}, local isomorphism {'yes' if is_local_isomorphism(g, cover) else 'no'}, "
        f"lifted rotation coherent {'yes' if coherent else 'no'}",
    ]
    lines.extend(f"# cocycle {x} {y} {c[(x, y)]}" for x, y in g.sorted_edges())
    return "\n".join(lines) + "\n" + format_edge_list(cover.graph)


def cmd_levels(args: argparse.Namespace) -> str:
    g = _finite_graph(args)
    _require_connected(g)
    z = level_space(g, _decomposition(args, g))
    aug = minor_augmentation_A(z) if args.minor else torso_augmentation_A(z)
    graph = Graph(range(len(z.points)), list(levels_graph_L(z).edges) + list(aug))
    if args.dot:
        return dot_levels(z, graph)
    return format_level_tree(z, graph)


def cmd_glue(args: argparse.Namespace) -> str:
    g = _finite_graph(args)
    _require_connected(g)
    z, tree, proj = glue_pipeline(g, _decomposition(args, g), minor=args.minor)
    if args.dot:
        return dot_levels(z, tree)
    text = format_level_tree(z, tree)
    text += "".join(f"# treeing {u} {v}\n" for u, v in proj.sorted_edges())
    return text


def cmd_ends(args: argparse.Namespace) -> str:
    lazy = _lazy_graph(args)
    if args.radius is None or args.radius < 1:
        raise UsageError("ends needs --radius R with R >= 1")
    margin = args.margin
    lines = ["# radius ends min-cut"]
    summary = ""
    for r in range(1, args.radius + 1):
        spectrum = end_spectrum(lazy, r, margin)
        cut = "-"
        if 2 <= len(spectrum) <= END_PAIR_LIMIT:
            values = [accessibility_cut(lazy, a, b, r + margin).value for a, b in combinations(spectrum, 2)]
            known = [v for v in values if v is not None]
            cut = str(min(known)) if known else "-"
        elif len(spectrum) > END_PAIR_LIMIT:
            cut = "skipped"
        lines.append(f"{r} {len(spectrum)} {cut}")
        if r == args.radius:
            if len(spectrum) >= 2:
                summary = f"ends>=2, min-cut={cut}"
            else:
                summary = f"ends={len(spectrum)}"
    return "\n".join(lines + [summary]) + "\n"


def cmd_analyze(args: argparse.Namespace) -> str:
    g = _finite_graph(args)
    lines = [f"vertices {len(g)}", f"edges {g.number_of_edges()}"]
    connected = len(g) > 0 and g.is_connected()
    lines.append(f"connected {'yes' if connected else 'no'}")
    if not connected:
        return "\n".join(lines) + "\n"
    kappa = 0
    while kappa < 4 and is_k_connected(g, kappa + 1):
        kappa += 1
    lines.append(f"connectivity {kappa}{'+' if kappa == 4 else ''}")
    lines.append(f"blocks {len(blocks(g))}")
    lines.append(f"cycle-space-dimension {cycle_space_dimension(g)}")
    res = is_planar(g)
    if res.planar:
        lines.append("planar yes")
        lines.append(f"faces {len(faces(g, res.rotation))}")
    else:
        lines.append(f"planar no ({res.witness.kind} subdivision)")
    if len(g) >= 2:
        td = block_tutte_decomposition(g)
        counts = Counter(str(c) for c in classify_all(td))
        parts = ", ".join(f"{cls}={counts.get(str(cls), 0)}" for cls in TorsoClass)
        lines.append(f"tutte bags {len(td.bags)} ({parts})")
    if len(g) <= RING_MAX_VERTICES:
        for k in range(1, args.order_cap + 1):
            elems = dicks_dunwoody_elements(g, k)
            size = 1 << len(atoms(g.vertices, elems))
            if size > args.closure_cap:
                raise ClosureCapExceeded(size, args.closure_cap)
            seps = [psi_inv(g, f) for f in elems]
            lines.append(f"dicks-dunwoody k={k}: {len(seps)} generators, ring size {size}")
    else:
        lines.append(f"dicks-dunwoody skipped (more than {RING_MAX_VERTICES} vertices)")
    return "\n".join(lines) + "\n"


def cmd_generate(args: argparse.Namespace) -> str:
    if not args.gen:
        raise UsageError("generate needs --gen NAME")
    g = _finite_graph(args)
    if args.dot:
        return dot_graph(g)
    return format_edge_list(g, [f"generated {args.gen}" + (f" radius {args.radius}" if args.radius is not None else "")])


def cmd_list(args: argparse.Namespace) -> str:
    lines = ["# corpus graphs"] + corpus.names()
    lines += ["# random generators"] + sorted(_RANDOM)
    lines += ["# infinite generators (need --radius)"] + sorted(GENERATORS)
    return "\n".join(lines) + "\n"


VERBS: dict[str, tuple[Callable[[argparse.Namespace], str], str]] = {
    "decompose": (cmd_decompose, "tree decomposition of a nested separation system (PACE-style .td)"),
    "tutte": (cmd_tutte, "Tutte decomposition, split into blocks first when needed"),
    "basis": (cmd_basis, "2-basis of facial cycles of a 2-connected planar graph"),
    "cover": (cmd_cover, "orientation cocycle and double cover of a 3-connected planar graph"),
    "levels": (cmd_levels, "level points and the levels graph with its augmentation"),
    "glue": (cmd_glue, "glued spanning tree of the level space and its projected treeing"),
    "ends": (cmd_ends, "end spectrum and accessibility cuts of an infinite generator"),
    "analyze": (cmd_analyze, "plain-text structural summary"),
    "generate": (cmd_generate, "emit a named, random or truncated graph as an edge list"),
    "list": (cmd_list, "list graph and generator names usable with --gen"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepforest", description="Separations, tree decompositions and treeings of graphs.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")
    for name, (_, help_text) in VERBS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--in", dest="input", metavar="FILE", help="edge-list input ('-' for stdin)")
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
        p.add_argument("--gen", metavar="NAME", help="corpus graph, random generator (name:params) or infinite generator")
        p.add_argument("--radius", type=int, help="truncation radius for infinite generators")
        p.add_argument("--order-cap", type=int, default=1 if name == "decompose" else 2, help="largest separation order considered")
        p.add_argument("--closure-cap", type=int, default=1 << 16, help="largest Boolean subring materialised")
        p.add_argument("--threads", type=int, default=1, help="accepted for interface stability; output does not depend on it")
        p.add_argument("--dot", action="store_true", help="emit DOT instead of text where supported")
        if name == "decompose":
            p.add_argument("--seps", metavar="FILE", help="separation lines 'S: ... | B: ...' instead of enumeration")
        if name == "cover":
            p.add_argument("--flip", metavar="V,V,...", help="vertices whose rotation is reversed")
        if name in ("levels", "glue"):
            p.add_argument("--td", metavar="FILE", help="tree decomposition to use (default: Tutte per block)")
            p.add_argument("--minor", action="store_true", help="use the minor-model augmentation")
        if name == "ends":
            p.add_argument("--margin", type=int, default=2, help="truncation depth beyond the radius")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1 or args.order_cap < 1 or args.closure_cap < 1:
        parser.error("--threads, --order-cap and --closure-cap must be positive")
    func = VERBS[args.verb][0]
    try:
        text = func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (GraphError, ValueError, OSError, ClosureCapExceeded) as exc:
        print(f"sepforest {args.verb}: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
