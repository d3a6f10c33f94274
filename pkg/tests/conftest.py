import pytest

from flagpath import (
    barycentric_subdivision,
    cross_polytope_boundary,
    cycle,
    from_facets,
    simplex_boundary,
    suspension,
)

# The flag-normal corpus the segment checks run on.
CORPUS_SPECS = (
    [f"cross:{k}" for k in range(2, 6)]
    + [f"cycle:{m}" for m in range(4, 9)]
    + [f"sd(simplexbd:{k})" for k in range(2, 5)]
    + ["sd(cross:3)", "susp(cycle:4)"]
)


@pytest.fixture
def octahedron():
    return cross_polytope_boundary(3)


@pytest.fixture
def tetra_boundary():
    return simplex_boundary(3)


@pytest.fixture
def triangle_cycle():
    return cycle(3)


@pytest.fixture
def square():
    return from_facets([{1, 2}, {2, 3}, {3, 4}, {4, 1}])


@pytest.fixture
def corpus():
    from flagpath import parse_spec

    return {s: parse_spec(s) for s in CORPUS_SPECS}


def small_complexes():
    """Deterministic assortment of small complexes, flag or not, normal or not."""
    out = {
        "cross:1": cross_polytope_boundary(1),
        "cross:2": cross_polytope_boundary(2),
        "cross:3": cross_polytope_boundary(3),
        "cross:4": cross_polytope_boundary(4),
        "simplexbd:2": simplex_boundary(2),
        "simplexbd:3": simplex_boundary(3),
        "simplexbd:4": simplex_boundary(4),
        "sd(simplexbd:2)": barycentric_subdivision(simplex_boundary(2)),
        "susp(cycle:5)": suspension(cycle(5)),
        "two triangles, shared edge": from_facets([{1, 2, 3}, {2, 3, 4}]),
        "two triangles, shared vertex": from_facets([{1, 2, 3}, {3, 4, 5}]),
        "path": from_facets([{1, 2}, {2, 3}]),
        "points": from_facets([{1}, {2}, {3}]),
        "triangle": from_facets([{1, 2, 3}]),
    }
    for m in range(3, 9):
        out[f"cycle:{m}"] = cycle(m)
    return out


# -- acceptance summary ---------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if "acceptance" not in report.keywords:
        return
    if report.when == "call" or report.failed:
        _ACCEPTANCE[report.nodeid] = _ACCEPTANCE.get(report.nodeid, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, ok in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {nodeid.split('::')[-1]}")
