"""Non-revisiting facet paths in flag normal simplicial complexes.

Builds combinatorial segments between facets and checks them against
brute-force graph metrics (facet-ridge diameter, the Hirsch bound).
"""

from .complex import (
    Face,
    SimplicialComplex,
    contains_face,
    face,
    from_facets,
    is_flag,
    join_with_vertex,
    link,
    minimal_nonfaces,
    star,
)
from .errors import *  # noqa: F401,F403
from .generators import (
    barycentric_subdivision,
    clique_complex,
    cross_polytope_boundary,
    cycle,
    simplex_boundary,
    subdivision_labels,
    suspension,
    wedge_at_vertex,
)
from .graphs import (
    UNREACHABLE,
    DistanceField,
    Graph,
    HirschReport,
    bfs_distances,
    descent_directions,
    dual_diameter,
    dual_distance,
    dual_graph,
    hirsch_bound,
    hirsch_bound_holds,
    is_normal,
    nearest_targets,
    skeleton_graph,
    vertex_distances,
)
from .io import (
    AuditReport,
    audit,
    load_complex,
    parse_facet_list,
    parse_spec,
    serialize_facet_list,
)
from .segment import (
    FacetPath,
    SegmentTrace,
    concat,
    is_facet_path,
    is_non_revisiting,
    revisit_witness,
    segment,
    segment_between_facets,
    segment_to_vertex_set,
    truncate_at_target,
)

__version__ = "0.1.0"
