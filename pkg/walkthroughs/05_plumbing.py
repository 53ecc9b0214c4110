# # Plumbing graphs
#
# Surfaces are vertices and signed intersection points are edges.  The total
# weight between two surfaces is the signed count of their intersections.

from colorsig import (PlumbingGraph, Surface, boundary_kernel_generators, intersection_graph,
                      is_balanced, kernel_basis, sublink_linking, total_weight)
from colorsig.plumbing import double

surfaces = [{"label": "F1", "genus": 0, "boundary": 1},
            {"label": "F2", "genus": 1, "boundary": 2},
            {"label": "F3", "genus": 0, "boundary": 1}]
points = [("x", "F1", "F2", 1), ("y", "F1", "F2", 1), ("z", "F2", "F3", -1), ("u", "F2", "F3", 1)]
G = intersection_graph(surfaces, points)
print(total_weight(G, "F1", "F2"), total_weight(G, "F2", "F3"), is_balanced(G))


# Kernel of H_1 of the boundary of the plumbed manifold: one class per
# boundary circle.

kb = kernel_basis(G)
for line in kb.format():
    print("  ", line)
print(len(kb), "generators, rank", kb.rank())


# The sublink linking numbers of a colored link come from the component
# linking matrix by summing over color blocks.

component_lk = [[0, 2, 1], [2, 0, 3], [1, 3, 0]]
lk = sublink_linking(component_lk, [0, 0, 1])
print(lk)
print(boundary_kernel_generators([[0, 1], [1, 0]], [1, 1]).format())


# Gluing each surface to the mirror of a surface with the same linking data
# gives a balanced graph of closed surfaces.

G2 = intersection_graph(surfaces, [("a", "F1", "F2", 1), ("b", "F2", "F1", 1),
                                   ("c", "F2", "F3", 1), ("d", "F3", "F2", -1)])
D = double(G, G2)
print([(v.label, v.genus) for v in D.vertices], is_balanced(D))

annulus = PlumbingGraph((Surface("A", 0, 2),))
print(kernel_basis(annulus).format())
