"""Skeleton and facet-ridge graphs, BFS distances and the Hirsch audit."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .complex import SimplicialComplex
from .errors import (
    AlreadyAtTarget,
    DisconnectedDualGraph,
    EmptySourceSet,
    TargetOutsideComplex,
    Unreachable,
)

UNREACHABLE = math.inf


class Graph:
    """Simple undirected graph: symmetric adjacency, no self-loops."""

    __slots__ = ("nodes", "adj")

    def __init__(self, nodes, edges=()):
        self.nodes = tuple(nodes)
        adj = {u: set() for u in self.nodes}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            adj[u].add(v)
            adj[v].add(u)
        self.adj = {u: frozenset(nb) for u, nb in adj.items()}

    def __repr__(self):
        return f"Graph({len(self.nodes)} nodes, {self.num_edges} edges)"

    def __contains__(self, node):
        return node in self.adj

    def neighbors(self, u):
        return self.adj[u]

    def degree(self, u):
        return len(self.adj[u])

    @property
    def num_edges(self):
        return sum(len(nb) for nb in self.adj.values()) // 2

    def edges(self):
        seen = {u: i for i, u in enumerate(self.nodes)}
        return [(u, v) for u in self.nodes for v in self.adj[u] if seen[u] < seen[v]]

    def is_connected(self):
        if not self.nodes:
            return True
        dist = bfs_distances(self, [self.nodes[0]])
        return all(dist[u] != UNREACHABLE for u in self.nodes)


class DistanceField(dict):
    """Map node -> hop distance to the nearest source (``UNREACHABLE`` if none)."""

    def __init__(self, sources, dist):
        super().__init__(dist)
        self.sources = frozenset(sources)

    def reachable(self, u):
        return self[u] != UNREACHABLE


def bfs_distances(G: Graph, sources) -> DistanceField:
    sources = list(dict.fromkeys(sources))
    if not sources:
        raise EmptySourceSet("bfs needs at least one source")
    dist = dict.fromkeys(G.nodes, UNREACHABLE)
    queue = deque()
    for s in sources:
        if s not in G.adj:
            raise KeyError(f"source {s!r} is not a node")
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in G.adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return DistanceField(sources, dist)


def skeleton_graph(C: SimplicialComplex) -> Graph:
    G = C._cache.get("skeleton_graph")
    if G is None:
        edges = {e for f in C.facets for e in combinations(f, 2)}
        G = C._cache["skeleton_graph"] = Graph(C.vertices, sorted(edges))
    return G


def dual_graph(C: SimplicialComplex) -> Graph:
    """Facet-ridge graph; nodes are the facets of C.

    Adjacency is found by bucketing facets under each of their ridges. For
    d = 0 every facet has the empty ridge, so the graph is complete.
    """
    G = C._cache.get("dual_graph")
    if G is None:
        buckets = {}
        for f in C.facets:
            for r in combinations(f, len(f) - 1):
                buckets.setdefault(r, []).append(f)
        edges = set()
        for fs in buckets.values():
            edges.update(combinations(fs, 2))
        G = C._cache["dual_graph"] = Graph(C.facets, sorted(edges))
    return G


def vertex_distances(C: SimplicialComplex, targets) -> DistanceField:
    """BFS distance field from a vertex set in the 1-skeleton of C (memoised)."""
    key = ("vdist", frozenset(targets))
    out = C._cache.get(key)
    if out is None:
        bad = key[1] - C.vertex_set
        if bad:
            raise TargetOutsideComplex(f"vertices {sorted(bad)} are not in the complex")
        out = C._cache[key] = bfs_distances(skeleton_graph(C), sorted(key[1]))
    return out


def _check_vertex(C, x):
    if x not in C.vertex_set:
        raise TargetOutsideComplex(f"vertex {x} is not in the complex")


def nearest_targets(C: SimplicialComplex, x: int, Y) -> frozenset:
    """Elements of Y closest to x in the 1-skeleton."""
    Y = frozenset(Y)
    if not Y:
        raise EmptySourceSet("target set is empty")
    _check_vertex(C, x)
    if not Y <= C.vertex_set:
        raise TargetOutsideComplex(f"targets {sorted(Y - C.vertex_set)} are not in the complex")
    from_x = vertex_distances(C, (x,))
    best = min(from_x[y] for y in Y)
    if best == UNREACHABLE:
        raise Unreachable(f"no target reachable from {x}")
    return frozenset(y for y in Y if from_x[y] == best)


def descent_directions(C: SimplicialComplex, x: int, Y) -> frozenset:
    """Neighbours y of x with d(y, Y) = d(x, Y) - 1, distances taken in C."""
    _check_vertex(C, x)
    dist = vertex_distances(C, Y)
    dx = dist[x]
    if dx == 0:
        raise AlreadyAtTarget(f"vertex {x} is already in the target set")
    if dx == UNREACHABLE:
        raise Unreachable(f"target set not reachable from {x}")
    G = skeleton_graph(C)
    return frozenset(y for y in G.adj[x] if dist[y] == dx - 1)


def is_normal(C: SimplicialComplex) -> bool:
    """True iff the star of every face, the empty face included, has a connected dual graph."""
    out = C._cache.get("normal")
    if out is None:
        # face -> facets containing it, built from the subsets of each facet
        cofacets = {}
        for f in C.facets:
            for k in range(len(f) + 1):
                for s in combinations(f, k):
                    cofacets.setdefault(s, []).append(f)
        out = all(_ridge_connected(fs) for fs in cofacets.values())
        C._cache["normal"] = out
    return out


def _ridge_connected(facets):
    if len(facets) == 1:
        return True
    buckets = {}
    for f in facets:
        for r in combinations(f, len(f) - 1):
            buckets.setdefault(r, []).append(f)
    seen, stack = {facets[0]}, [facets[0]]
    while stack:
        f = stack.pop()
        for r in combinations(f, len(f) - 1):
            for g in buckets[r]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
    return len(seen) == len(facets)


def dual_distance(C: SimplicialComplex, X, Y) -> float:
    G = dual_graph(C)
    return bfs_distances(G, [tuple(X)])[tuple(Y)]


def dual_diameter(C: SimplicialComplex) -> int:
    G = dual_graph(C)
    best = 0
    for f in G.nodes:
        far = max(bfs_distances(G, [f]).values())
        if far == UNREACHABLE:
            raise DisconnectedDualGraph("dual graph is disconnected")
        best = max(best, far)
    return best


@dataclass(frozen=True)
class HirschReport:
    holds: bool
    bound: int
    diameter: int

    def __bool__(self):
        return self.holds


def hirsch_bound(C: SimplicialComplex) -> int:
    return C.n - (C.d + 1)


def hirsch_bound_holds(C: SimplicialComplex) -> HirschReport:
    bound = hirsch_bound(C)
    diameter = dual_diameter(C)
    return HirschReport(diameter <= bound, bound, diameter)
