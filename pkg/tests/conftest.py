import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from scipy.spatial import ConvexHull, QhullError

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def lower_hull_facets(points, heights):
    """Vertex sets of lower facets of the lifted points, by qhull in floating point.

    Returns ``None`` when the heights are not generic enough for a clean
    answer: qhull fails, or some lower facet has a further point on its plane.
    """
    pts = np.asarray(points, dtype=float)
    lifted = np.column_stack([pts, np.asarray(heights, dtype=float)])
    try:
        hull = ConvexHull(lifted)
    except QhullError:
        return None
    faces = set()
    for simplex, eq in zip(hull.simplices, hull.equations):
        if eq[-2] < -1e-9:
            dist = lifted @ eq[:-1] + eq[-1]
            if (np.abs(dist) < 1e-7).sum() != len(simplex):
                return None
            faces.add(tuple(sorted(int(v) for v in simplex)))
    return faces


@pytest.fixture
def qhull_lower():
    return lower_hull_facets


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
