import math

import numpy as np
import pytest

from pipefit import KINDS, platonic_solid, solid_vertex_figure, standard_catalog

DEG = math.pi / 180


def compatible_pairs():
    """Every (solid, standard hub) pair whose arm count matches the vertex degree."""
    catalog = standard_catalog()
    pairs = []
    for kind in KINDS:
        q = platonic_solid(kind).degree
        for hub in catalog.hubs_for(q):
            pairs.append((kind, hub.name))
    return pairs


def inward_axis_oracle(kind, v):
    """Axis at vertex v taken straight from the position vector (solids are origin-centred)."""
    p = platonic_solid(kind).vertices[v]
    return -p / np.linalg.norm(p)


@pytest.fixture(scope="session")
def catalog():
    return standard_catalog()


@pytest.fixture(params=KINDS)
def kind(request):
    return request.param


@pytest.fixture
def dodeca_vf():
    return solid_vertex_figure("dodecahedron")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
