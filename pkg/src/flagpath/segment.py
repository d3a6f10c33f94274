"""Combinatorial segments between facets of flag normal complexes.

A segment walks from a facet towards a target by following a shortest
vertex path (the necklace) in the 1-skeleton. Each step between two
consecutive pearls is a lower-dimensional segment built inside the link of
the current pearl and lifted back by joining with that pearl.

Every "pick any" choice is resolved by the smallest label (or the
lexicographically smallest facet), so the output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complex import SimplicialComplex, face, is_flag, link
from .errors import (
    Disconnected,
    EndpointMismatch,
    FacetsNotInComplex,
    InvalidPath,
    NotFlag,
    NotNormal,
    RecursionDepthExceeded,
    TargetNeverMet,
    TargetOutsideComplex,
    EmptySourceSet,
)
from .graphs import (
    UNREACHABLE,
    descent_directions,
    is_normal,
    nearest_targets,
    skeleton_graph,
    vertex_distances,
)


@dataclass(frozen=True)
class FacetPath:
    """Sequence of facets; ``length`` counts steps, not facets."""

    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(face(s) for s in self.steps))
        if not self.steps:
            raise InvalidPath("a facet path has at least one facet")

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def first(self):
        return self.steps[0]

    @property
    def last(self):
        return self.steps[-1]

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def lift(self, v: int) -> "FacetPath":
        """Join every step with vertex v."""
        return FacetPath(tuple(s + (v,) for s in self.steps))


@dataclass(frozen=True)
class SegmentTrace:
    """Diagnostic record of one segment construction.

    ``kind`` is ``"vertex_set"`` (facet to vertex set) or ``"facets"``
    (facet to facet). ``breakpoints[i]`` is the index of the facet X_i in
    the path; the last breakpoint is always the last index. ``children[i]``
    is the trace of the link-level segment between breakpoints i and i+1,
    built in ``link(complex, pearls[i])``. For a 0-dimensional complex
    there are no pearls.
    """

    kind: str
    complex: SimplicialComplex
    source: tuple
    target: frozenset
    pearls: tuple = ()
    breakpoints: tuple = ()
    targets: tuple = ()
    children: tuple = ()

    @property
    def ell(self) -> int:
        return len(self.pearls) - 1

    def walk(self):
        """Yield this trace and every descendant, depth first."""
        yield self
        for c in self.children:
            yield from c.walk()


def concat(gamma: FacetPath, delta: FacetPath) -> FacetPath:
    if gamma.last != delta.first:
        raise EndpointMismatch(f"{gamma.last} != {delta.first}")
    return FacetPath(gamma.steps + delta.steps[1:])


def truncate_at_target(gamma: FacetPath, T) -> FacetPath:
    """Prefix of gamma ending at its first facet meeting T."""
    T = frozenset(T)
    for i, s in enumerate(gamma.steps):
        if T.intersection(s):
            return FacetPath(gamma.steps[: i + 1])
    raise TargetNeverMet(f"no step of the path meets {sorted(T)}")


def _ridge_adjacent(a, b, d):
    return a != b and len(set(a) & set(b)) == d


def is_facet_path(C: SimplicialComplex, steps) -> bool:
    steps = list(steps)
    if not steps:
        return False
    try:
        steps = [face(s) for s in steps]
    except ValueError:
        return False
    if not all(s in C.facet_set for s in steps):
        return False
    return all(_ridge_adjacent(a, b, C.d) for a, b in zip(steps, steps[1:]))


def revisit_witness(C: SimplicialComplex, gamma) -> Optional[tuple]:
    """First ``(v, i, k, j)`` with v in steps i and j but not in step k, i < k < j.

    In a pure complex the facets of St(v, C) are the facets containing v,
    so a path is non-revisiting iff each vertex occupies a contiguous run of
    steps. Returns None for non-revisiting paths.
    """
    steps = list(gamma)
    if not is_facet_path(C, steps):
        raise InvalidPath("not a facet path of this complex")
    last_seen = {}
    for k, s in enumerate(steps):
        for v in s:
            if v in last_seen and last_seen[v] < k - 1:
                return (v, last_seen[v], last_seen[v] + 1, k)
            last_seen[v] = k
    return None


def is_non_revisiting(C: SimplicialComplex, gamma) -> bool:
    return revisit_witness(C, gamma) is None


def _check_preconditions(C):
    if not is_flag(C):
        raise NotFlag("the complex is not flag")
    if not is_normal(C):
        raise NotNormal("the complex is not normal")
    if C.d >= 1 and not skeleton_graph(C).is_connected():
        raise Disconnected("the 1-skeleton is disconnected")


def _depth_guard(depth, limit):
    if depth > limit:
        raise RecursionDepthExceeded(f"recursion depth {depth} exceeds {limit}")


def _part1(C, X, Y, depth, limit):
    _depth_guard(depth, limit)
    X = tuple(X)
    if C.d == 0:
        if Y.intersection(X):
            steps = (X,)
        else:
            steps = (X, min(f for f in C.facets if Y.intersection(f)))
        trace = SegmentTrace("vertex_set", C, X, Y, breakpoints=(0, len(steps) - 1))
        return FacetPath(steps), trace

    dist = vertex_distances(C, Y)
    x = min(X, key=lambda v: (dist[v], v))
    if dist[x] == UNREACHABLE:
        raise Disconnected(f"target set unreachable from facet {X}")
    Yi = nearest_targets(C, x, Y)
    steps = [X]
    pearls, breakpoints, targets, children = [x], [0], [Yi], []
    Xi = X
    # the necklace has dist[x] edges, so the loop runs dist[x] times
    for _ in range(dist[x] + 1):
        if Y.intersection(Xi):
            break
        T = descent_directions(C, x, Yi)
        L = link(C, (x,))
        sub, sub_trace = _part1(L, tuple(v for v in Xi if v != x), T, depth + 1, limit)
        sub = truncate_at_target(sub, T)
        lifted = sub.lift(x)
        steps.extend(lifted.steps[1:])
        Xi = lifted.last
        children.append(sub_trace)
        breakpoints.append(len(steps) - 1)
        x = min(T.intersection(Xi))
        Yi = nearest_targets(C, x, Yi)
        pearls.append(x)
        targets.append(Yi)
    else:
        raise RecursionDepthExceeded("necklace loop did not reach the target set")
    breakpoints.append(len(steps) - 1)
    trace = SegmentTrace(
        "vertex_set", C, X, Y,
        pearls=tuple(pearls),
        breakpoints=tuple(breakpoints),
        targets=tuple(targets),
        children=tuple(children),
    )
    return FacetPath(tuple(steps)), trace


def _part2(C, X, Y, depth, limit):
    _depth_guard(depth, limit)
    first, t1 = _part1(C, X, frozenset(Y), depth, limit)
    if C.d == 0:
        trace = SegmentTrace("facets", C, tuple(X), frozenset(Y), breakpoints=t1.breakpoints)
        return first, trace
    Xl = first.last
    x = min(set(Xl) & set(Y))
    L = link(C, (x,))
    sub, sub_trace = _part2(
        L,
        tuple(v for v in Xl if v != x),
        tuple(v for v in Y if v != x),
        depth + 1,
        limit,
    )
    path = concat(first, sub.lift(x))
    trace = SegmentTrace(
        "facets", C, tuple(X), frozenset(Y),
        pearls=t1.pearls[:-1] + (x,),
        breakpoints=t1.breakpoints[:-1] + (path.length,),
        targets=t1.targets[:-1] + (frozenset({x}),),
        children=t1.children + (sub_trace,),
    )
    return path, trace


def segment_to_vertex_set(C: SimplicialComplex, X, Y, check: bool = True):
    """Facet path from facet X to the first facet meeting vertex set Y.

    Returns ``(FacetPath, SegmentTrace)``. Y is met only by the last facet.
    With ``check=False`` the flag/normal hypotheses are not verified.
    """
    X = face(X)
    Y = frozenset(Y)
    if X not in C.facet_set:
        raise FacetsNotInComplex(f"{X} is not a facet")
    if not Y:
        raise EmptySourceSet("target vertex set is empty")
    if not Y <= C.vertex_set:
        raise TargetOutsideComplex(f"targets {sorted(Y - C.vertex_set)} are not in the complex")
    if check:
        _check_preconditions(C)
    return _part1(C, X, Y, 0, C.d + 1)


def segment_between_facets(C: SimplicialComplex, X, Y, check: bool = True):
    """Combinatorial segment from facet X to facet Y; ``(FacetPath, SegmentTrace)``."""
    X, Y = face(X), face(Y)
    missing = [f for f in (X, Y) if f not in C.facet_set]
    if missing:
        raise FacetsNotInComplex(f"not facets of the complex: {missing}")
    if check:
        _check_preconditions(C)
    return _part2(C, X, Y, 0, C.d + 1)


def segment(C: SimplicialComplex, X, Y, check: bool = True) -> FacetPath:
    """Just the path of :func:`segment_between_facets`."""
    return segment_between_facets(C, X, Y, check=check)[0]

