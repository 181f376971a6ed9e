import math

import numpy as np
import pytest

from polyframe.geometry import make_polytope, make_regular_simplex

# lines printed by the acceptance module, echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def square():
    return make_polytope("quadrilateral", angles=np.arange(4) * np.pi / 2)


@pytest.fixture
def tetra():
    return make_regular_simplex(3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def perturbed(T, angle=0.1, vertex=0):
    """Rotate one vertex of a simplex by ``angle`` radians along the sphere."""
    V = T.vertices.copy()
    v = V[vertex]
    w = V[(vertex + 1) % len(V)] - np.dot(V[(vertex + 1) % len(V)], v) * v
    w /= np.linalg.norm(w)
    V[vertex] = math.cos(angle) * v + math.sin(angle) * w
    return make_polytope("simplex", vertices=V)
