"""
Barycentric subdivision makes any complex flag
==============================================

The boundary of a tetrahedron is not flag: its only minimal non-face is
the whole vertex set. Its subdivision is flag, so segments work there.
"""

from flagpath import (
    barycentric_subdivision,
    hirsch_bound_holds,
    is_flag,
    minimal_nonfaces,
    segment,
    simplex_boundary,
    subdivision_labels,
)

tet = simplex_boundary(3)
print("tetrahedron boundary, minimal non-faces:", sorted(minimal_nonfaces(tet)))
print("flag:", is_flag(tet))

sd = barycentric_subdivision(tet)
labels = subdivision_labels(tet)
print(sd, "flag:", is_flag(sd))
print("largest minimal non-face:", max(len(m) for m in minimal_nonfaces(sd)))

# vertex labels of the subdivision name faces of the original complex
X, Y = sd.facets[0], sd.facets[-1]
print("from", [labels[v] for v in X])
print("to  ", [labels[v] for v in Y])
print("segment length:", segment(sd, X, Y).length)
print(hirsch_bound_holds(sd))
