"""Deterministic families of test complexes.

All generators label vertices 1..n. Operators that combine or modify
complexes (suspension, wedge, subdivision) first relabel densely in
sorted order, so their output does not depend on the input labels.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

import networkx as nx

from .complex import SimplicialComplex
from .errors import BadParameter, DimensionMismatch, NotPure


def _relabel(C: SimplicialComplex, offset=0, mapping=None):
    mapping = dict(mapping or {})
    nxt = offset + 1
    for v in C.vertices:
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    return [tuple(mapping[v] for v in f) for f in C.facets]


def cross_polytope_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional cross-polytope.

    Antipodal pairs are {2i-1, 2i}; facets pick one vertex from each pair.
    """
    if k < 1:
        raise BadParameter(f"cross_polytope_boundary needs k >= 1, got {k}")
    pairs = [(2 * i - 1, 2 * i) for i in range(1, k + 1)]
    return SimplicialComplex(product(*pairs))


def simplex_boundary(k: int) -> SimplicialComplex:
    """All k-subsets of {1..k+1}: boundary of a k-simplex, dimension k-1."""
    if k < 2:
        raise BadParameter(f"simplex_boundary needs k >= 2, got {k}")
    return SimplicialComplex(combinations(range(1, k + 2), k))


def cycle(m: int) -> SimplicialComplex:
    if m < 3:
        raise BadParameter(f"cycle needs m >= 3, got {m}")
    return SimplicialComplex((i, i % m + 1) for i in range(1, m + 1))


def suspension(C: SimplicialComplex) -> SimplicialComplex:
    facets = _relabel(C)
    s, t = C.n + 1, C.n + 2
    return SimplicialComplex([f + (s,) for f in facets] + [f + (t,) for f in facets])


def subdivision_labels(C: SimplicialComplex) -> dict:
    """Label -> face map used by :func:`barycentric_subdivision`.

    Nonempty faces are sorted by (dimension, vertices) and numbered from 1,
    so the original vertices keep the first n labels.
    """
    faces = sorted(C.faces(include_empty=False), key=lambda f: (len(f), f))
    return {i: f for i, f in enumerate(faces, start=1)}


def barycentric_subdivision(C: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset: facets are maximal chains.

    A maximal chain ending at facet F is an ordering of F's vertices, read
    as the chain of its prefixes, so every facet contributes (d+1)! facets.
    """
    index = {f: i for i, f in subdivision_labels(C).items()}
    out = []
    for F in C.facets:
        for order in permutations(F):
            out.append(tuple(index[tuple(sorted(order[: j + 1]))] for j in range(len(order))))
    return SimplicialComplex(out)


def wedge_at_vertex(C1: SimplicialComplex, C2: SimplicialComplex, v1=None, v2=None):
    """Disjoint union of C1 and C2 with one vertex of each identified.

    Defaults glue the smallest-label vertex of each. C1 is relabelled to
    1..n1, C2 to n1+1.. with its glued vertex sent to the image of v1.
    """
    if C1.d != C2.d:
        raise DimensionMismatch(f"dimensions {C1.d} and {C2.d} differ")
    if C1.d < 1:
        raise DimensionMismatch("wedge needs dimension >= 1")
    v1 = C1.vertices[0] if v1 is None else v1
    v2 = C2.vertices[0] if v2 is None else v2
    if v1 not in C1.vertex_set or v2 not in C2.vertex_set:
        raise BadParameter("wedge point must be a vertex of its complex")
    first = {v: i for i, v in enumerate(C1.vertices, start=1)}
    second = _relabel(C2, offset=C1.n, mapping={v2: first[v1]})
    return SimplicialComplex(_relabel(C1) + second)


def clique_complex(G) -> SimplicialComplex:
    """Complex whose facets are the maximal cliques of G (a flagpath or networkx graph)."""
    H = nx.Graph()
    if isinstance(G, nx.Graph):
        H.add_nodes_from(G.nodes)
        H.add_edges_from(G.edges)
    else:
        H.add_nodes_from(G.nodes)
        H.add_edges_from(G.edges())
    cliques = [tuple(sorted(c)) for c in nx.find_cliques(H)]
    sizes = {len(c) for c in cliques}
    if len(sizes) > 1:
        raise NotPure(f"maximal cliques have sizes {sorted(sizes)}")
    return SimplicialComplex(cliques)
