"""
When the hypotheses fail
========================

Segments need a flag and normal complex. Here are the standard ways each
hypothesis breaks, and what the library does about it.
"""

from flagpath import (
    cross_polytope_boundary,
    cycle,
    dual_graph,
    is_flag,
    is_normal,
    minimal_nonfaces,
    segment_between_facets,
    wedge_at_vertex,
)
from flagpath.errors import NotFlag, NotNormal

# A triangle is the smallest non-flag cycle; a square is flag.
for m in (3, 4, 5):
    C = cycle(m)
    print(f"cycle:{m}", "flag:", is_flag(C), "minimal non-faces:", sorted(minimal_nonfaces(C)))

# Two octahedra glued at a vertex: the facet-ridge graph falls apart.
octa = cross_polytope_boundary(3)
W = wedge_at_vertex(octa, octa)
print(W, "normal:", is_normal(W), "dual graph connected:", dual_graph(W).is_connected())

try:
    segment_between_facets(W, W.facets[0], W.facets[-1])
except NotNormal as exc:
    print("refused:", exc)

try:
    segment_between_facets(cycle(3), (1, 2), (2, 3))
except NotFlag as exc:
    print("refused:", exc)
