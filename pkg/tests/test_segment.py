import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import CORPUS_SPECS
from flagpath import (
    FacetPath,
    concat,
    cycle,
    from_facets,
    is_facet_path,
    is_non_revisiting,
    parse_spec,
    revisit_witness,
    segment_between_facets,
    segment_to_vertex_set,
    simplex_boundary,
    truncate_at_target,
    wedge_at_vertex,
)
from flagpath.errors import (
    EndpointMismatch,
    FacetsNotInComplex,
    InvalidPath,
    NotFlag,
    NotNormal,
    TargetNeverMet,
    TargetOutsideComplex,
)

A, B, C_, D = (1, 2), (2, 3), (3, 4), (4, 5)
TWO_TRIANGLES = from_facets([{1, 2, 3}, {2, 3, 4}])


def test_concat():
    assert concat(FacetPath([A, B]), FacetPath([B, C_])).steps == (A, B, C_)
    assert concat(FacetPath([A]), FacetPath([A])).steps == (A,)
    with pytest.raises(EndpointMismatch):
        concat(FacetPath([A, B]), FacetPath([C_, D]))


def test_truncate_at_target():
    path = FacetPath([(1, 2), (2, 3), (3, 4)])
    assert truncate_at_target(path, {4}) == path
    assert truncate_at_target(path, {3}).steps == ((1, 2), (2, 3))
    with pytest.raises(TargetNeverMet):
        truncate_at_target(FacetPath([(1, 2), (2, 3)]), {7})


def test_is_facet_path(octahedron):
    assert is_facet_path(octahedron, [(1, 3, 5), (1, 3, 6)])
    assert not is_facet_path(octahedron, [(1, 3, 5), (2, 4, 6)])
    assert not is_facet_path(octahedron, [(1, 3, 5), (1, 3, 5)])
    assert not is_facet_path(octahedron, [(1, 3, 5), (1, 3, 7)])
    assert is_facet_path(from_facets([{1}, {2}, {3}]), [(1,), (3,), (2,)])


def test_is_non_revisiting_examples():
    C6 = cycle(6)
    walk = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 2)]
    assert not is_non_revisiting(C6, walk)
    assert revisit_witness(C6, walk)[0] == 1
    v, i, k, j = revisit_witness(C6, walk)
    assert v in walk[i] and v not in walk[k] and v in walk[j] and i < k < j
    assert is_non_revisiting(C6, [(1, 2)])
    assert is_non_revisiting(C6, [(1, 2), (2, 3)])
    with pytest.raises(InvalidPath):
        is_non_revisiting(C6, [(1, 2), (3, 4)])


def test_segment_antipodal_octahedron(octahedron):
    path, trace = segment_between_facets(octahedron, (1, 3, 5), (2, 4, 6))
    assert path.first == (1, 3, 5) and path.last == (2, 4, 6)
    assert path.length == 3
    assert is_non_revisiting(octahedron, path)
    assert path.steps == ((1, 3, 5), (1, 3, 6), (1, 4, 6), (2, 4, 6))
    assert trace.pearls == (1, 6)
    assert trace.breakpoints == (0, 1, 3)


def test_segment_to_vertex_in_octahedron(octahedron):
    # brute force: the closest facet containing 2 is one ridge away
    index, D = oracles.dual_apsp(octahedron.facets)
    best = min(D[index[(1, 3, 5)], index[f]] for f in octahedron.facets if 2 in f)
    assert best == 1
    path, trace = segment_to_vertex_set(octahedron, (1, 3, 5), {2})
    assert path.steps == ((1, 3, 5), (2, 3, 5))
    assert path.length == best
    assert trace.pearls == (3, 2)


def test_segment_trivial(octahedron):
    path, trace = segment_to_vertex_set(octahedron, (1, 3, 5), {5, 6})
    assert path.steps == ((1, 3, 5),)
    assert trace.ell == 0
    path, _ = segment_between_facets(octahedron, (1, 4, 6), (1, 4, 6))
    assert path.length == 0


def test_segment_zero_dimensional():
    points = from_facets([{1}, {2}, {3}])
    path, _ = segment_to_vertex_set(points, (1,), {3})
    assert path.steps == ((1,), (3,))
    path, _ = segment_between_facets(points, (2,), (1,))
    assert path.steps == ((2,), (1,))


def test_segment_two_triangles():
    path, trace = segment_between_facets(TWO_TRIANGLES, (1, 2, 3), (2, 3, 4))
    assert path.steps == ((1, 2, 3), (2, 3, 4))
    assert trace.ell == 0
    assert trace.pearls == (2,)


def test_segment_preconditions(octahedron):
    with pytest.raises(NotFlag):
        segment_between_facets(simplex_boundary(3), (1, 2, 3), (2, 3, 4))
    wedge = wedge_at_vertex(octahedron, octahedron)
    with pytest.raises(NotNormal):
        segment_between_facets(wedge, wedge.facets[0], wedge.facets[-1])
    with pytest.raises(FacetsNotInComplex):
        segment_between_facets(octahedron, (1, 3, 5), (1, 2, 3))
    with pytest.raises(TargetOutsideComplex):
        segment_to_vertex_set(octahedron, (1, 3, 5), {9})


def test_skip_precheck_gives_same_path(octahedron):
    a = segment_between_facets(octahedron, (1, 3, 5), (2, 4, 5))
    b = segment_between_facets(octahedron, (1, 3, 5), (2, 4, 5), check=False)
    assert a[0] == b[0]


def check_trace_structure(path, trace):
    """Breakpoints, pearl coverage and recursion depth of a whole trace tree."""
    assert trace.breakpoints[0] == 0
    assert trace.breakpoints[-1] == path.length
    assert all(a <= b for a, b in zip(trace.breakpoints, trace.breakpoints[1:]))
    for i, x in enumerate(trace.pearls):
        for k in range(trace.breakpoints[i], trace.breakpoints[i + 1] + 1):
            assert x in path[k]
    for a, b in zip(trace.targets, trace.targets[1:]):
        assert b <= a
    depth = max_depth(trace)
    assert depth <= trace.complex.d


def max_depth(trace):
    return 0 if not trace.children else 1 + max(max_depth(c) for c in trace.children)


@pytest.mark.parametrize("spec", ["cross:3", "cycle:5", "susp(cycle:5)", "sd(simplexbd:3)"])
def test_segment_properties_all_pairs(spec):
    C = parse_spec(spec)
    bound = C.n - (C.d + 1)
    for X in C.facets:
        for Y in C.facets:
            path, trace = segment_between_facets(C, X, Y, check=False)
            assert path.first == X and path.last == Y
            assert is_facet_path(C, path)
            assert is_non_revisiting(C, path) == oracles.non_revisiting(path.steps)
            assert is_non_revisiting(C, path)
            assert path.length <= bound
            check_trace_structure(path, trace)
            # the Part 1 prefix meets Y only in its last facet
            cut = trace.breakpoints[-2]
            assert all(not set(Y) & set(f) for f in path.steps[:cut])


@pytest.mark.parametrize("spec", ["cross:4", "cycle:7", "sd(simplexbd:2)"])
def test_vertex_set_segments_meet_target_only_at_end(spec):
    C = parse_spec(spec)
    for X in C.facets:
        for v in C.vertices:
            for Y in ({v}, {v, C.vertices[0]}):
                path, trace = segment_to_vertex_set(C, X, Y, check=False)
                assert is_facet_path(C, path)
                assert is_non_revisiting(C, path)
                assert set(path.last) & Y
                assert all(not set(f) & Y for f in path.steps[:-1])
                check_trace_structure(path, trace)


corpus_pairs = st.sampled_from(CORPUS_SPECS).flatmap(
    lambda s: st.tuples(st.just(s), st.integers(0, 10**6), st.integers(0, 10**6))
)
_CACHE = {}


@settings(max_examples=150, deadline=None)
@given(corpus_pairs)
def test_segment_deterministic_and_valid(args):
    spec, i, j = args
    C = _CACHE.setdefault(spec, parse_spec(spec))
    X, Y = C.facets[i % len(C)], C.facets[j % len(C)]
    p1, t1 = segment_between_facets(C, X, Y, check=False)
    p2, t2 = segment_between_facets(parse_spec(spec), X, Y, check=False)
    assert p1 == p2
    assert (t1.pearls, t1.breakpoints, t1.targets) == (t2.pearls, t2.breakpoints, t2.targets)
    assert is_non_revisiting(C, p1)
    assert p1.length <= C.n - (C.d + 1)
