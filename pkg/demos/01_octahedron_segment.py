"""
A combinatorial segment across the octahedron
=============================================

Build the boundary of the octahedron, walk from one triangle to the
antipodal one, and look at the necklace of pearls the walk follows.
"""

from flagpath import (
    cross_polytope_boundary,
    dual_distance,
    is_flag,
    is_non_revisiting,
    is_normal,
    segment_between_facets,
)

# The octahedron has antipodal vertex pairs {1,2}, {3,4}, {5,6}; a facet
# picks one vertex from each pair.
octa = cross_polytope_boundary(3)
print(octa, "flag:", is_flag(octa), "normal:", is_normal(octa))

path, trace = segment_between_facets(octa, (1, 3, 5), (2, 4, 6))
for step, facet in enumerate(path):
    print(step, facet)

# Each block between consecutive breakpoints keeps one pearl fixed.
print("pearls:", trace.pearls)
print("breakpoints:", trace.breakpoints)

# The walk never re-enters a vertex star it has left, and it is as short
# as the facet-ridge distance allows.
print("non-revisiting:", is_non_revisiting(octa, path))
print("length", path.length, "dual distance", dual_distance(octa, (1, 3, 5), (2, 4, 6)))
