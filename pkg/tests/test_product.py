import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rdftri import (
    bipyramid,
    bipyramid_apices,
    c3_min,
    c4_table,
    check_coloring,
    dense_segment,
    is_regular,
    make_ordering,
    product_signature_predicted,
    signature,
    simplicial_product,
    square_bipyramid,
    staircase,
    staircase_signature,
    unit_segment,
)
from rdftri.errors import InvalidOrdering, InvalidSplit, MissingLifting, NotABipyramid, UnsupportedOrderingCombination

FACTORS = {
    "I": unit_segment,
    "seg02": lambda: dense_segment(0, 2),
    "c3": c3_min,
    "B2": square_bipyramid,
    "B3": lambda: bipyramid(3),
    "stc22": lambda: staircase(2, 2),
}


def cc(K):
    return make_ordering(K, "color_consecutive")


@pytest.mark.parametrize("a,b", list(itertools.product(FACTORS, repeat=2)))
def test_product_signature_formula_and_colouring(a, b):
    K, L = FACTORS[a](), FACTORS[b]()
    P = simplicial_product(K, cc(K), L, cc(L))
    assert len(P) == len(K) * len(L) * math.comb(K.dim + L.dim, K.dim)
    assert signature(P) == staircase_signature(K.dim, L.dim) * signature(K) * signature(L)
    assert check_coloring(P, P.coloring)


@pytest.mark.parametrize("a,b", [("c3", "B2"), ("seg02", "stc22"), ("B3", "I"), ("stc22", "c3")])
def test_cell_volumes_multiply(a, b):
    K, L = FACTORS[a](), FACTORS[b]()
    P = simplicial_product(K, cc(K), L, cc(L))
    nl = len(L.config)
    kvol = {f: v for f, v in zip(K.facet_list(), K.volumes.tolist())}
    lvol = {g: v for g, v in zip(L.facet_list(), L.volumes.tolist())}
    for facet, vol in zip(P.facet_list(), P.volumes.tolist()):
        f = tuple(sorted({v // nl for v in facet}))
        g = tuple(sorted({v % nl for v in facet}))
        assert vol == kvol[f] * lvol[g]
    assert int(P.volumes.sum()) == P.config.volume


@pytest.mark.parametrize("mode", ["lexrev", "color"])
@pytest.mark.parametrize("a,b", [("c3", "B2"), ("seg02", "B3"), ("B2", "stc22"), ("I", "c3")])
def test_product_liftings_certify(a, b, mode):
    K, L = FACTORS[a](), FACTORS[b]()
    assert is_regular(simplicial_product(K, cc(K), L, cc(L), lifting=mode))


@pytest.mark.parametrize("kname", ["I", "seg02", "c3", "B2", "stc22"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_symmetric_bipyramid_branch(kname, n):
    K, B = FACTORS[kname](), bipyramid(n)
    ok, ob = cc(K), make_ordering(B, "symmetric")
    P = simplicial_product(K, ok, B, ob, lifting="lexrev")
    assert signature(P) == product_signature_predicted(K, ok, B, ob)
    assert check_coloring(P, P.coloring)
    assert is_regular(P)
    # swapping the factors changes nothing
    assert signature(simplicial_product(B, ob, K, ok)) == signature(P)


@pytest.mark.parametrize("kname", ["I", "c3", "seg02"])
def test_almost_colour_consecutive_splits(kname):
    K, B = FACTORS[kname](), square_bipyramid()
    zero = [v for v, c in enumerate(B.coloring) if c == 0]
    for r in range(len(zero) + 1):
        for split in itertools.combinations(zero, r):
            ok, ob = cc(K), make_ordering(B, "almost_color_consecutive", split=split)
            assert ob.perm[: len(split)] == tuple(sorted(split))
            P = simplicial_product(K, ok, B, ob)
            assert signature(P) == product_signature_predicted(K, ok, B, ob)


@given(st.permutations(range(8)))
def test_any_order_gives_a_triangulation(perm):
    K, L = c3_min(), unit_segment()
    P = simplicial_product(K, make_ordering(K, "explicit", perm=perm), L, cc(L))
    assert int(P.volumes.sum()) == P.config.volume
    assert P.dual_graph.n_components == 1


def test_bipyramid_shape():
    for n in (1, 2, 3, 4):
        B = bipyramid(n)
        assert len(B) == 2 and (B.volumes == 1).all() and B.config.volume == 2
        lo, hi = bipyramid_apices(B)
        assert (lo, hi) == (0, n + 1)
    assert bipyramid_apices(square_bipyramid()) == (0, 3)


def test_ordering_errors():
    with pytest.raises(NotABipyramid):
        make_ordering(c3_min(), "symmetric")
    with pytest.raises(InvalidSplit):
        make_ordering(square_bipyramid(), "almost_color_consecutive", split=[1])
    with pytest.raises(InvalidOrdering):
        make_ordering(unit_segment(), "explicit", perm=[0, 0])
    with pytest.raises(InvalidOrdering):
        make_ordering(unit_segment(), "zigzag")
    B = square_bipyramid()
    sym = make_ordering(B, "symmetric")
    with pytest.raises(UnsupportedOrderingCombination):
        product_signature_predicted(B, sym, B, sym)
    with pytest.raises(MissingLifting):
        K = c3_min().with_(lifting=None)
        simplicial_product(K, cc(K), B, cc(B), lifting="lexrev")


def test_orderings_are_colour_monotone():
    for build in FACTORS.values():
        K = build()
        assert cc(K).is_color_monotone()


def test_c4_times_segment():
    K = c4_table("corrected")
    P = simplicial_product(K, cc(K), unit_segment(), cc(unit_segment()), lifting="color")
    assert len(P) == 23 * 5
    assert int(P.volumes.sum()) == 120
    assert signature(P) == 2 * staircase_signature(4, 1)
