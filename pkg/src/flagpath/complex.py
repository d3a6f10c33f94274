"""Pure abstract simplicial complexes stored by their facet list.

Faces are plain tuples of strictly increasing integer labels. Labels are
global: links and stars keep the labels of the ambient complex, which is
what lets a path found inside a link be lifted back by a vertex join.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import EmptyInput, FaceNotInComplex, NotPure, VertexCollision

Face = tuple  # strictly increasing tuple of non-negative ints


def face(vertices: Iterable[int]) -> Face:
    """Canonical face from any iterable of labels; rejects duplicates."""
    vs = tuple(sorted(vertices))
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertex in face {vs}")
    for v in vs:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex labels must be non-negative ints, got {v!r}")
    return vs


class SimplicialComplex:
    """Immutable pure simplicial complex.

    ``facets`` is a lexicographically sorted tuple of faces of common
    dimension ``d``; ``n`` counts the distinct vertices. The only complex
    allowed to contain the empty face as a facet is the link of a facet,
    whose sole facet is ``()`` (``d == -1``).
    """

    __slots__ = ("facets", "vertices", "n", "d", "_facet_sets", "_cache")

    def __init__(self, facets: Iterable[Iterable[int]]):
        canon = sorted({face(f) for f in facets})
        if not canon:
            raise EmptyInput("a complex needs at least one facet")
        size = len(canon[0])
        for f in canon:
            if len(f) != size:
                raise NotPure(f"facets {canon[0]} and {f} have different dimensions")
        self.facets = tuple(canon)
        self.vertices = tuple(sorted({v for f in canon for v in f}))
        self.n = len(self.vertices)
        self.d = size - 1
        self._facet_sets = tuple(frozenset(f) for f in canon)
        self._cache = {}

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, d={self.d}, facets={len(self.facets)})"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __len__(self):
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)

    def __contains__(self, sigma):
        return contains_face(self, sigma)

    @property
    def vertex_set(self) -> frozenset:
        vs = self._cache.get("vertex_set")
        if vs is None:
            vs = self._cache["vertex_set"] = frozenset(self.vertices)
        return vs

    @property
    def facet_set(self) -> frozenset:
        fs = self._cache.get("facet_set")
        if fs is None:
            fs = self._cache["facet_set"] = frozenset(self.facets)
        return fs

    def faces(self, include_empty: bool = True) -> frozenset:
        """Every face of the complex (downward closure of the facets)."""
        key = ("faces", include_empty)
        out = self._cache.get(key)
        if out is None:
            acc = set()
            for f in self.facets:
                for k in range(0 if include_empty else 1, len(f) + 1):
                    acc.update(combinations(f, k))
            out = self._cache[key] = frozenset(acc)
        return out

    def is_facet(self, sigma) -> bool:
        return face(sigma) in self.facet_set

    def skeleton(self, k: int) -> "SimplicialComplex":
        """The k-skeleton; it is pure of dimension min(k, d)."""
        k = min(k, self.d)
        return SimplicialComplex({s for f in self.facets for s in combinations(f, k + 1)})


def from_facets(raw) -> SimplicialComplex:
    """Build a complex from a list of vertex collections.

    >>> from_facets([{1, 2, 3}, {3, 2, 1}]).facets
    ((1, 2, 3),)
    """
    raw = list(raw)
    if not raw:
        raise EmptyInput("no facets given")
    for f in raw:
        if len(f) == 0:
            raise EmptyInput("facets must be non-empty")
    return SimplicialComplex(raw)


def contains_face(C: SimplicialComplex, sigma) -> bool:
    s = frozenset(sigma)
    if not s:
        return True
    return any(s <= f for f in C._facet_sets)


def _require_face(C, sigma):
    s = face(sigma)
    if not contains_face(C, s):
        raise FaceNotInComplex(f"{s} is not a face of {C!r}")
    return s


def star(C: SimplicialComplex, sigma) -> SimplicialComplex:
    """Facets of C containing sigma, as a complex of the same dimension."""
    s = frozenset(_require_face(C, sigma))
    return SimplicialComplex(f for f, fs in zip(C.facets, C._facet_sets) if s <= fs)


def link(C: SimplicialComplex, sigma) -> SimplicialComplex:
    """Link of sigma: ``{F - sigma : sigma <= F}``, labels preserved.

    The link of a facet is the complex whose only facet is the empty face.
    Results are memoised on C since the segment construction revisits the
    same vertex links many times.
    """
    s = _require_face(C, sigma)
    key = ("link", s)
    out = C._cache.get(key)
    if out is None:
        ss = frozenset(s)
        out = SimplicialComplex(fs - ss for fs in C._facet_sets if ss <= fs)
        C._cache[key] = out
    return out


def join_with_vertex(C: SimplicialComplex, v: int) -> SimplicialComplex:
    if v in C.vertex_set:
        raise VertexCollision(f"vertex {v} already appears in the complex")
    return SimplicialComplex(f + (v,) for f in C.facets)


def minimal_nonfaces(C: SimplicialComplex) -> frozenset:
    """Inclusion-minimal vertex subsets that are not faces of C.

    Grows candidates level by level: a k-set is a minimal non-face iff it
    is not a face while all of its (k-1)-subsets are. Every vertex is a
    face, so the search starts at size 2 and cannot go past d + 2.
    """
    faces = C.faces()
    by_size = {}
    for f in faces:
        by_size.setdefault(len(f), []).append(f)
    out = set()
    for k in range(2, C.d + 3):
        for base in by_size.get(k - 1, ()):
            for v in C.vertices:
                if v <= base[-1]:
                    continue
                cand = base + (v,)
                if cand in faces:
                    continue
                if all(sub in faces for sub in combinations(cand, k - 1)):
                    out.add(cand)
    return frozenset(out)


def is_flag(C: SimplicialComplex) -> bool:
    out = C._cache.get("flag")
    if out is None:
        out = C._cache["flag"] = all(len(m) == 2 for m in minimal_nonfaces(C))
    return out
