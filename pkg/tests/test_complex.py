import itertools

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import lower_hull_facets
from rdftri import (
    Triangulation,
    bipartition,
    c3_min,
    c4_table,
    check_coloring,
    f_vector,
    fold,
    is_foldable,
    sharp_triangulation,
    signature,
    signed_signature,
    staircase,
)
from rdftri.complex import bfs_distances
from rdftri.errors import DegenerateSimplex, DisconnectedDualGraph, NotBipartite, NotFoldable, NotPure, RidgeSharedByThree
from rdftri.lattice import PointConfiguration, cube


def grid(side, dim):
    pts = tuple(itertools.product(range(side + 1), repeat=dim))
    return PointConfiguration(dim, pts)


@st.composite
def random_regular(draw):
    """A regular triangulation of a small grid from generic random heights."""
    dim = draw(st.integers(2, 3))
    side = draw(st.integers(1, 3 if dim == 2 else 2))
    config = grid(side, dim)
    heights = draw(st.lists(st.integers(0, 10**6), min_size=len(config), max_size=len(config), unique=True))
    facets = lower_hull_facets(config.points, heights)
    assume(facets is not None)
    K = Triangulation(config, facets, lifting=heights)
    assume(int(K.volumes.sum()) == side**dim * {2: 2, 3: 6}[dim])
    return K


FIXED = [c3_min, c4_table, lambda: staircase(2, 3), lambda: sharp_triangulation(2, 3)]


@pytest.mark.parametrize("build", FIXED)
@given(data=st.data())
def test_bipartition_ignores_roots(build, data):
    K = build()
    try:
        reference = bipartition(K).color
    except NotBipartite:
        return
    for _ in range(10):
        root = data.draw(st.integers(0, len(K) - 1))
        assert (bipartition(K, roots=[root]).color == reference).all()
        assert signature(K, roots=[root]) == signature(K)


@given(random_regular())
def test_fold_colouring_is_proper(K):
    try:
        coloring = fold(K)
    except NotFoldable as exc:
        parent, child = exc.witness
        assert exc.vertex in K.facet_list()[child]
        return
    assert check_coloring(K, coloring)
    assert sorted(set(coloring)) == list(range(K.dim + 1))


@given(random_regular())
def test_bipartition_is_proper_or_has_odd_cycle(K):
    g = K.dual_graph
    try:
        colors = bipartition(K).color
    except NotBipartite as exc:
        cycle = exc.cycle
        assert len(cycle) % 2 == 1
        nbrs = g.neighbours()
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert b in nbrs[a]
        return
    e = g.edges
    assert (colors[e[:, 0]] != colors[e[:, 1]]).all()


@given(random_regular())
def test_ball_euler_characteristic(K):
    f = f_vector(K)
    assert sum((-1) ** i * x for i, x in enumerate(f)) == 1


@given(random_regular())
def test_foldable_iff_bipartite_planar(K):
    # in the plane a triangulated disk is foldable exactly when its dual graph is bipartite
    if K.dim != 2:
        return
    assert is_foldable(K) == _is_bipartite(K)


def _is_bipartite(K):
    try:
        bipartition(K)
    except NotBipartite:
        return False
    return True


def test_sharp_witnesses():
    K = sharp_triangulation(2, 1)
    with pytest.raises(NotFoldable) as info:
        fold(K)
    assert len(set(info.value.colors)) == 2
    with pytest.raises(NotBipartite) as cyc:
        bipartition(K)
    assert len(cyc.value.cycle) == 3


def test_signed_signature_subsets():
    K = c4_table()
    total = signed_signature(K)
    mask = np.arange(len(K)) % 2 == 0
    assert signed_signature(K, mask) + signed_signature(K, ~mask) == total
    assert signed_signature(K, lambda f: 0 in f) == signed_signature(K, [i for i, f in enumerate(K.facet_list()) if 0 in f])
    assert abs(total) == 2


def test_dual_graph_of_c4():
    g = c4_table().dual_graph
    assert g.n_nodes == 23 and g.n_components == 1
    dist = bfs_distances(g, 0)
    assert len(dist) == 23


def test_construction_errors():
    sq = cube(2)
    with pytest.raises(NotPure):
        Triangulation(sq, [(0, 1, 2), (1, 3)])
    with pytest.raises(DegenerateSimplex):
        Triangulation(sq, [(0, 1, 1)])
    with pytest.raises(DegenerateSimplex):
        Triangulation(PointConfiguration(2, ((0, 0), (1, 0), (2, 0))), [(0, 1, 2)]).volumes
    with pytest.raises(IndexError):
        Triangulation(sq, [(0, 1, 7)])
    line = PointConfiguration(1, ((0,), (1,), (2,), (3,)))
    with pytest.raises(RidgeSharedByThree):
        Triangulation(line, [(0, 1), (1, 2), (1, 3)]).dual_graph
    with pytest.raises(DisconnectedDualGraph):
        signature(Triangulation(PointConfiguration(1, ((0,), (1,), (2,), (3,))), [(0, 1), (2, 3)]))


def test_with_shares_facets():
    K = c3_min()
    L = K.with_(lifting=[0] * 8)
    assert L.facets is K.facets and L.coloring == K.coloring
    assert L.lifting.single_level
