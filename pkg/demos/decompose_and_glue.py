"""From a separation to a tree decomposition, its levels and a treeing."""

from sepforest import chm_tree, make, make_system
from sepforest.graph import k4_minus_edge
from sepforest.levels import W_edges, glue_pipeline
from sepforest.treedecomp import format_td, induced_separations, torsos
from sepforest.tutte import torso_annotations, tutte_decomposition

g = k4_minus_edge()
print("graph edges:", g.sorted_edges())

split = make(g, {0, 1}, [(0, 2), (1, 2)])
system = make_system([split], g)
td = chm_tree(system)
print("\ntree decomposition from one 2-separation and its complement:")
print(format_td(td), end="")
print("edges of the tree give back the system:", induced_separations(td).as_set() == system.as_set())
for t in torsos(td):
    print("torso on", sorted(t.graph.vertices), "virtual edges", sorted(t.virtual_edges))

tutte = tutte_decomposition(g)
print("\nTutte decomposition with torso classes:")
print(format_td(tutte, torso_annotations(tutte)), end="")

z, tree, treeing = glue_pipeline(g, tutte)
print("\nlevel points (vertex, node):", list(z.points))
print("cross-level edges W:", sorted(W_edges(z)))
print("glued spanning tree on the points:", tree.sorted_edges())
print("projected treeing of the graph:", treeing.sorted_edges())
