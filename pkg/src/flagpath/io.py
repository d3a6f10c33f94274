"""Facet-list files, generator spec strings and the audit report."""

from __future__ import annotations

import json
import os
import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from . import generators
from .complex import SimplicialComplex, is_flag
from .errors import BadSpec, DisconnectedDualGraph, FlagPathError, NotPure, ParseError
from .graphs import (
    bfs_distances,
    dual_diameter,
    dual_graph,
    hirsch_bound,
    is_normal,
)
from .segment import is_facet_path, revisit_witness, segment_between_facets

REPORT_VERSION = 1


# -- facet-list text format ------------------------------------------------

def parse_facet_list(doc: str) -> SimplicialComplex:
    """One facet per line, whitespace separated; ``#`` comments and blank lines skipped."""
    facets = []
    size, size_line = None, None
    for lineno, raw in enumerate(doc.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            vs = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"not an integer list: {raw!r}", lineno) from None
        if any(v < 0 for v in vs):
            raise ParseError("vertex labels must be non-negative", lineno)
        if len(set(vs)) != len(vs):
            raise ParseError("repeated vertex in facet", lineno)
        if size is None:
            size, size_line = len(vs), lineno
        elif len(vs) != size:
            raise NotPure(
                f"line {lineno}: facet of size {len(vs)} but line {size_line} has size {size}"
            )
        facets.append(vs)
    if not facets:
        raise ParseError("no facets in document")
    return SimplicialComplex(facets)


def serialize_facet_list(C: SimplicialComplex) -> str:
    """Canonical form: sorted vertices per line, sorted lines, LF newlines."""
    return "".join(" ".join(map(str, f)) + "\n" for f in C.facets)


def read_facet_list(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_facet_list(fh.read())


def write_facet_list(C: SimplicialComplex, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_facet_list(C))


def parse_facet_literal(text: str) -> tuple:
    try:
        vs = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad facet literal {text!r}") from None
    if not vs:
        raise ParseError("empty facet literal")
    return tuple(sorted(vs))


# -- generator spec strings ------------------------------------------------
#
#   spec := name ":" int | op "(" spec ")" | "wedge(" spec "," spec ")"
#   name := cross | simplexbd | cycle
#   op   := sd | susp

_LEAVES = {
    "cross": generators.cross_polytope_boundary,
    "simplexbd": generators.simplex_boundary,
    "cycle": generators.cycle,
}
_UNARY = {
    "sd": generators.barycentric_subdivision,
    "susp": generators.suspension,
}
_TOKEN = re.compile(r"\s*([A-Za-z_]+|\d+|[():,])")


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise BadSpec(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_spec(text: str) -> SimplicialComplex:
    """Build a complex from e.g. ``cross:4``, ``sd(cross:3)``, ``wedge(cross:3,cross:3)``."""
    toks = _tokenize(text)
    pos = 0

    def take(expected=None):
        nonlocal pos
        if pos >= len(toks):
            raise BadSpec(f"unexpected end of spec {text!r}")
        tok = toks[pos]
        if expected is not None and tok != expected:
            raise BadSpec(f"expected {expected!r}, got {tok!r} in {text!r}")
        pos += 1
        return tok

    def expr():
        name = take()
        if name in _LEAVES:
            take(":")
            arg = take()
            if not arg.isdigit():
                raise BadSpec(f"{name} needs an integer parameter, got {arg!r}")
            try:
                return _LEAVES[name](int(arg))
            except FlagPathError as exc:
                raise BadSpec(str(exc)) from exc
        if name in _UNARY:
            take("(")
            inner = expr()
            take(")")
            return _UNARY[name](inner)
        if name == "wedge":
            take("(")
            a = expr()
            take(",")
            b = expr()
            take(")")
            try:
                return generators.wedge_at_vertex(a, b)
            except FlagPathError as exc:
                raise BadSpec(str(exc)) from exc
        raise BadSpec(f"unknown generator {name!r}")

    C = expr()
    if pos != len(toks):
        raise BadSpec(f"trailing input in spec {text!r}")
    return C


def load_complex(source: str) -> SimplicialComplex:
    """A facet-list file if ``source`` names an existing path, else a spec string."""
    if os.path.isfile(source):
        return read_facet_list(source)
    return parse_spec(source)


# -- audit -----------------------------------------------------------------

@dataclass
class AuditReport:
    complex: str
    n: int
    d: int
    facets: int
    flag: bool
    normal: bool
    bound: int
    diameter: int | None = None
    pairs_checked: int = 0
    max_segment_length: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.flag and self.normal and not self.violations

    def to_dict(self) -> dict:
        out = asdict(self)
        out["version"] = REPORT_VERSION
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def structural_report(C: SimplicialComplex, name: str) -> AuditReport:
    return AuditReport(
        complex=name,
        n=C.n,
        d=C.d,
        facets=len(C.facets),
        flag=is_flag(C),
        normal=is_normal(C),
        bound=hirsch_bound(C),
    )


def all_pairs(m: int):
    return list(combinations(range(m), 2))


def sample_pairs(m: int, count: int, seed: int):
    """``count`` distinct unordered index pairs, drawn with Python's Mersenne Twister.

    Pairs are decoded from ranks in the lexicographic order of
    ``combinations(range(m), 2)``, then sorted.
    """
    total = m * (m - 1) // 2
    rng = random.Random(seed)
    ranks = sorted(rng.sample(range(total), min(count, total)))
    pairs, it, cur = [], iter(ranks), 0
    nxt = next(it, None)
    for i in range(m):
        row = m - 1 - i
        while nxt is not None and nxt < cur + row:
            pairs.append((i, i + 1 + nxt - cur))
            nxt = next(it, None)
        cur += row
    return pairs


def check_pair(C: SimplicialComplex, X, Y, bound: int):
    """Build and verify one segment; returns (length, violation or None)."""
    X, Y = tuple(X), tuple(Y)
    try:
        path, _ = segment_between_facets(C, X, Y, check=False)
    except FlagPathError as exc:
        return None, {"from": list(X), "to": list(Y), "kind": "error",
                      "detail": f"{type(exc).__name__}: {exc}"}
    steps = list(path)
    base = {"from": list(X), "to": list(Y), "length": path.length}
    if not is_facet_path(C, steps) or steps[0] != X or steps[-1] != Y:
        return path.length, {**base, "kind": "invalid_path"}
    witness = revisit_witness(C, steps)
    if witness is not None:
        v, i, k, j = witness
        return path.length, {**base, "kind": "revisit", "vertex": v, "indices": [i, k, j]}
    if path.length > bound:
        return path.length, {**base, "kind": "length_bound", "bound": bound}
    dist = bfs_distances(dual_graph(C), [X])[Y]
    if path.length < dist:
        return path.length, {**base, "kind": "shorter_than_dual_distance", "dual_distance": dist}
    return path.length, None


def _check_chunk(args):
    C, pairs, bound = args
    facets = C.facets
    return [(i, j, *check_pair(C, facets[i], facets[j], bound)) for i, j in pairs]


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("FLAGPATH_JOBS", "1")))
    except ValueError:
        return 1


def audit(C: SimplicialComplex, name: str = "", pairs=None, jobs: int | None = None) -> AuditReport:
    """Segment audit over facet index pairs (all unordered pairs by default).

    Stops after the structural fields when C is not flag and normal.
    """
    report = structural_report(C, name)
    if not (report.flag and report.normal):
        return report
    try:
        report.diameter = dual_diameter(C)
    except DisconnectedDualGraph:
        report.violations.append({"kind": "disconnected_dual_graph"})
        return report
    if report.diameter > report.bound:
        report.violations.append(
            {"kind": "hirsch_bound", "diameter": report.diameter, "bound": report.bound}
        )
    if pairs is None:
        pairs = all_pairs(len(C.facets))
    pairs = sorted(pairs)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(pairs) < 2:
        results = _check_chunk((C, pairs, report.bound))
    else:
        chunks = [pairs[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_check_chunk, [(C, ch, report.bound) for ch in chunks])
                       for r in part]
    results.sort(key=lambda r: (r[0], r[1]))
    report.pairs_checked = len(results)
    for _, _, length, violation in results:
        if length is not None:
            report.max_segment_length = max(report.max_segment_length, length)
        if violation is not None:
            report.violations.append(violation)
    return report
