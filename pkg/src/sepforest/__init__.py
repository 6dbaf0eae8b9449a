"""Separations, nested separation systems, tree decompositions and the
treeing constructions built on them, for finite graphs and lazily
presented infinite ones."""

from .graph import Graph, GraphError
from .separations import Separation, complement, leq, make, nested, sides
from .treedecomp import TreeDecomposition, chm_tree, induced_separations, make_system, validate_tree_decomposition

__all__ = [
    "Graph",
    "GraphError",
    "Separation",
    "TreeDecomposition",
    "chm_tree",
    "complement",
    "induced_separations",
    "leq",
    "make",
    "make_system",
    "nested",
    "sides",
    "validate_tree_decomposition",
]
