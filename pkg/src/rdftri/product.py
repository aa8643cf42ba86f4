"""Simplicial products of triangulations under vertex orderings.

For facets ``f`` of ``K`` and ``g`` of ``L``, with vertices listed along the
orderings, the cell ``f × g`` is cut into the staircase triangulation of the
``|f| × |g|`` grid. Product point ``(v, w)`` has index ``v * |L points| + w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .complex import Triangulation, fold, odd_mask, signature, signed_signature
from .errors import (
    InvalidOrdering,
    InvalidSplit,
    MissingLifting,
    NotABipyramid,
    UnsupportedOrderingCombination,
)
from .lattice import PointConfiguration, cube, product_configuration
from .staircase import path_templates, staircase_signature

KINDS = ("color_consecutive", "symmetric", "almost_color_consecutive", "explicit")


@dataclass(frozen=True)
class VertexOrdering:
    """A total order of the points of a triangulation's configuration.

    ``perm[r]`` is the point of rank ``r``. ``colors`` is the colouring the
    order was built from (``None`` for symmetric and explicit orders of
    uncoloured complexes), ``split`` the set ``V0'`` of an almost colour
    consecutive order and ``dim`` the dimension of the complex.
    """

    perm: tuple[int, ...]
    kind: str
    dim: int
    colors: tuple[int, ...] | None = None
    split: frozenset[int] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidOrdering(f"unknown ordering kind {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InvalidOrdering("ordering is not a permutation of the points")

    @cached_property
    def rank(self) -> np.ndarray:
        r = np.empty(len(self.perm), dtype=np.int64)
        r[list(self.perm)] = np.arange(len(self.perm))
        return r

    def is_color_monotone(self) -> bool:
        if self.colors is None:
            return False
        seq = [self.colors[v] for v in self.perm]
        return all(a <= b for a, b in zip(seq, seq[1:]))


def _coloring_of(K: Triangulation) -> tuple[int, ...]:
    return K.coloring if K.coloring is not None else fold(K)


def bipyramid_apices(K: Triangulation) -> tuple[int, int]:
    """The two vertices off the common ridge of a two-facet complex."""
    if len(K) != 2:
        raise NotABipyramid(f"a bipyramid has 2 facets, got {len(K)}")
    f, g = (set(x) for x in K.facet_list())
    if len(f & g) != K.dim:
        raise NotABipyramid("the two facets do not share a ridge")
    if len(f | g) != len(K.config):
        raise NotABipyramid("the configuration has points outside both facets")
    (a,) = f - g
    (b,) = g - f
    return (a, b) if K.config.points[a] <= K.config.points[b] else (b, a)


def make_ordering(K: Triangulation, kind: str, split=None, perm=None) -> VertexOrdering:
    """Build a vertex ordering of ``kind`` for ``K``.

    Ties inside a colour class are broken by lexicographic order of the
    coordinates. ``split`` is the set ``V0'`` for ``almost_color_consecutive``
    and ``perm`` the order itself for ``explicit``.
    """
    pts = K.config.points
    n_pts = len(pts)
    if kind == "explicit":
        if perm is None:
            raise InvalidOrdering("explicit ordering needs a permutation")
        return VertexOrdering(tuple(int(v) for v in perm), kind, K.dim, K.coloring)
    if kind == "symmetric":
        first, last = bipyramid_apices(K)
        middle = sorted((v for v in range(n_pts) if v not in (first, last)), key=lambda v: pts[v])
        return VertexOrdering((first, *middle, last), kind, K.dim, K.coloring)
    colors = _coloring_of(K)
    if kind == "color_consecutive":
        order = sorted(range(n_pts), key=lambda v: (colors[v], pts[v]))
        return VertexOrdering(tuple(order), kind, K.dim, colors)
    if kind == "almost_color_consecutive":
        split = frozenset(int(v) for v in (split or ()))
        bad = [v for v in split if not 0 <= v < n_pts or colors[v] != 0]
        if bad:
            raise InvalidSplit(f"vertices {sorted(bad)} are not in colour class 0")
        head = sorted(split, key=lambda v: pts[v])
        body = sorted((v for v in range(n_pts) if colors[v] != 0), key=lambda v: (colors[v], pts[v]))
        tail = sorted((v for v in range(n_pts) if colors[v] == 0 and v not in split), key=lambda v: pts[v])
        return VertexOrdering(tuple(head + body + tail), kind, K.dim, colors, split)
    raise InvalidOrdering(f"unknown ordering kind {kind!r}")


def _ordered_facets(K: Triangulation, order: VertexOrdering) -> np.ndarray:
    if len(order.perm) != len(K.config):
        raise InvalidOrdering("ordering and configuration differ in size")
    ranks = order.rank[K.facets]
    idx = np.argsort(ranks, axis=1, kind="stable")
    return np.take_along_axis(K.facets, idx, axis=1)


def product_coloring(K: Triangulation, order_k: VertexOrdering, L: Triangulation, order_l: VertexOrdering):
    """Colouring of the product for the two proven ordering schemes, else ``None``."""
    m, n = K.dim, L.dim
    ck, cl = order_k.kind, order_l.kind
    if ck == "color_consecutive" and cl == "color_consecutive":
        a, b = np.asarray(order_k.colors), np.asarray(order_l.colors)
    elif ck == "color_consecutive" and cl == "symmetric":
        a, b = np.asarray(order_k.colors), order_l.rank
    elif ck == "symmetric" and cl == "color_consecutive":
        a, b = order_k.rank, np.asarray(order_l.colors)
    else:
        return None
    return tuple(((a[:, None] + b[None, :]) % (m + n + 1)).reshape(-1).tolist())


def simplicial_product(
    K: Triangulation,
    order_k: VertexOrdering,
    L: Triangulation,
    order_l: VertexOrdering,
    lifting: str | None = None,
) -> Triangulation:
    """The simplicial product ``K ⊠ L``.

    ``lifting`` may be ``"lexrev"`` or ``"color"`` to attach the corresponding
    product lifting; two-level factor liftings are flattened first.
    """
    m, n = K.dim, L.dim
    config = product_configuration(K.config, L.config)
    t = path_templates(m, n)
    fk = _ordered_facets(K, order_k)[:, t[:, :, 0]]
    fl = _ordered_facets(L, order_l)[:, t[:, :, 1]]
    facets = fk[:, None] * len(L.config) + fl[None, :]
    facets = facets.reshape(-1, m + n + 1)
    coloring = product_coloring(K, order_k, L, order_l)
    lift = None
    if lifting is not None:
        from .regularity import flatten_lifting, product_lifting

        if K.lifting is None or L.lifting is None:
            raise MissingLifting("both factors need a lifting")
        lam = K.lifting if K.lifting.single_level else flatten_lifting(K)
        mu = L.lifting if L.lifting.single_level else flatten_lifting(L)
        lift = product_lifting(lam, mu, order_k, order_l, mode=lifting)
    return Triangulation(config, facets, coloring=coloring, lifting=lift)


def bipyramid(n: int) -> Triangulation:
    """Two ``n``-simplices glued along ``Δ_{n-1}``; apices ``-e_n`` (index 0) and ``e_n`` (index n+1)."""
    if n < 1:
        raise ValueError("bipyramid needs n >= 1")
    e = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    origin = (0,) * n
    apex_low = tuple(-x for x in e[n - 1])
    pts = [apex_low, origin] + e[: n - 1] + [e[n - 1]]
    facets = [(e[i], 0) for i in range(n - 1)]
    facets.append((tuple([-1] * (n - 1) + [-1]), 1))
    facets.append((tuple([-1] * (n - 1) + [1]), 1))
    config = PointConfiguration(n, tuple(pts), tuple(facets), 2)
    cells = [tuple(range(n + 1)), tuple(range(1, n + 2))]
    coloring = [w % (n + 1) for w in range(n + 2)]
    lifting = [1] + [0] * n + [1]
    return Triangulation(config, cells, coloring=coloring, lifting=lifting)


def square_bipyramid() -> Triangulation:
    """The unit square cut along its anti-diagonal, a bipyramid over a segment."""
    return Triangulation(cube(2), [(0, 1, 2), (1, 2, 3)], coloring=(0, 1, 2, 0), lifting=(1, 0, 0, 1))


def _split_signed(L: Triangulation, order_l: VertexOrdering) -> tuple[int, int]:
    colors = order_l.colors
    split = order_l.split or frozenset()
    zero = [next(v for v in f if colors[v] == 0) for f in L.facet_list()]
    in_head = np.array([v in split for v in zero], dtype=bool)
    return signed_signature(L, in_head), signed_signature(L, ~in_head)


def product_signature_predicted(
    K: Triangulation, order_k: VertexOrdering, L: Triangulation, order_l: VertexOrdering
) -> int:
    """Signature of ``K ⊠ L`` predicted from the factors, where a formula applies."""
    ck, cl = order_k.kind, order_l.kind
    if ck != "color_consecutive" and cl == "color_consecutive":
        return product_signature_predicted(L, order_l, K, order_k)
    if ck != "color_consecutive":
        raise UnsupportedOrderingCombination(f"no formula for orderings ({ck}, {cl})")
    m, n = K.dim, L.dim
    base = staircase_signature(m, n) * signature(K)
    if cl == "color_consecutive":
        return base * signature(L)
    if cl == "symmetric":
        bipyramid_apices(L)
        if m % 2 == 0:
            return base * signature(L)
        return base * int(odd_mask(L).sum())
    if cl == "almost_color_consecutive":
        if m % 2 == 0:
            return base * signature(L)
        head, tail = _split_signed(L, order_l)
        return base * abs(head - tail)
    raise UnsupportedOrderingCombination(f"no formula for orderings ({ck}, {cl})")

