import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rdftri import Triangulation, c3_min, c4_table, staircase
from rdftri.errors import UnsupportedShape
from rdftri.lattice import (
    PointConfiguration,
    cube,
    normalized_volume,
    product_configuration,
    segment,
    sharp_simplex,
    simplex,
    standard_shape,
)


def unimodular(dim, seed):
    """Product of random elementary integer matrices."""
    rng = np.random.default_rng(seed)
    u = np.eye(dim, dtype=np.int64)
    for _ in range(3 * dim):
        i, j = rng.choice(dim, size=2, replace=False) if dim > 1 else (0, 0)
        if i == j:
            u[:, 0] *= -1
            continue
        u[i] += int(rng.integers(-2, 3)) * u[j]
    return u


def transform(K, u, shift):
    pts = tuple(tuple(int(x) for x in u @ np.array(p) + shift) for p in K.config.points)
    return Triangulation(PointConfiguration(K.dim, pts), K.facets)


@pytest.mark.parametrize("build", [c3_min, c4_table, lambda: staircase(2, 2), lambda: staircase(1, 3)])
@given(seed=st.integers(0, 2**32 - 1), shift=st.integers(-5, 5))
def test_volume_invariant_under_unimodular_maps(build, seed, shift):
    K = build()
    u = unimodular(K.dim, seed)
    assert abs(round(np.linalg.det(u))) == 1
    moved = transform(K, u, shift)
    assert moved.volumes.tolist() == K.volumes.tolist()


def test_normalized_volume_of_standard_simplex():
    for m in range(1, 6):
        assert normalized_volume(simplex(m), range(m + 1)) == 1


def test_cube_and_simplex_shapes():
    c = cube(3)
    assert len(c) == 8 and c.volume == 6
    assert c.points[5] == (1, 0, 1)
    assert simplex(2).points == ((0, 0), (1, 0), (0, 1))


def test_product_configuration_volume():
    p = product_configuration(simplex(2), cube(2))
    assert len(p) == 12
    assert p.volume == 1 * 2 * math.comb(4, 2)
    assert p.points[1 * 4 + 2] == (1, 0, 0, 1)


def test_segment_and_sharp():
    assert segment(0, 2).volume == 2
    assert [len(sharp_simplex(2, k)) for k in (1, 2, 3)] == [4, 5, 6]
    assert sharp_simplex(3, 2).volume == 5


def test_standard_shape_errors():
    assert len(standard_shape("cube", 2)) == 4
    with pytest.raises(UnsupportedShape):
        standard_shape("torus", 2)
    with pytest.raises(UnsupportedShape):
        segment(3, 1)
