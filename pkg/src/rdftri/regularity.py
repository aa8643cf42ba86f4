"""Certifying that a lifting induces a triangulation.

A triangulation of a convex point configuration is induced by a lifting
exactly when the lifted facets are strictly locally convex across every
interior ridge and every unused point lifts strictly above the surface. Both
checks reduce to the sign of an affine form evaluated in exact integers, one
integer per channel of the two-level lifting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .complex import Triangulation
from .errors import DegenerateBase, DegenerateLifting, MissingColoring, MissingLifting, NotLocallyConvex
from .lifting import TwoLevel, TwoLevelLifting, as_two_level
from .linalg import batch_scaled_inverse, fraction_det, lcm_denominator

__all__ = [
    "TwoLevel",
    "TwoLevelLifting",
    "RegularityCertificate",
    "lifted_hyperplane_sign",
    "induces_triangulation",
    "is_regular",
    "flatten_lifting",
    "product_lifting",
]

_CHUNK = 8192


def lifted_hyperplane_sign(p, lift_p, simplex_points, simplex_lifts) -> str:
    """Position of the lifted point ``(p, lift_p)`` relative to the lifted simplex.

    Returns ``"above"``, ``"on"`` or ``"below"``. Lifts may be numbers or
    :class:`TwoLevel` values; the comparison is exact for infinitesimal ε.
    """
    pts = [tuple(int(x) for x in q) for q in simplex_points]
    m = len(pts[0]) if pts else 0
    if len(pts) != m + 1:
        raise DegenerateBase(f"need {m + 1} simplex points in dimension {m}")
    lifts = [as_two_level(x) for x in simplex_lifts]
    target = as_two_level(lift_p)
    minor = [[1] * (m + 1)] + [[q[r] for q in pts] for r in range(m)]
    c0 = (-1) ** (m + 1) * fraction_det(minor)
    if c0 == 0:
        raise DegenerateBase("simplex vertices are affinely dependent")
    head = [[1] * (m + 2)] + [[p[r]] + [q[r] for q in pts] for r in range(m)]
    d_base = fraction_det(head + [[target.base] + [x.base for x in lifts]])
    d_eps = fraction_det(head + [[target.eps] + [x.eps for x in lifts]])
    sign = TwoLevel(d_base, d_eps).sign() * (1 if c0 > 0 else -1)
    return {1: "above", 0: "on", -1: "below"}[sign]


@dataclass
class RegularityCertificate:
    """Per-ridge evidence that a lifting induces a triangulation.

    Row ``e`` says that the lifted vertex ``vertex[e]`` of facet
    ``facets[e, 1]`` lies above the lifted hyperplane of ``facets[e, 0]``
    across ``ridges[e]``, by ``base_margin[e] + ε·eps_margin[e]`` (up to the
    positive scale factors of the channels). Rows are in ridge order. The eps
    margin is only evaluated where the base margin vanishes unless the
    certificate was built with ``full=True``.
    """

    ridges: np.ndarray
    facets: np.ndarray
    vertex: np.ndarray
    base_margin: np.ndarray
    eps_margin: np.ndarray
    base_scale: int = 1
    eps_scale: int = 1
    unused_points: list = field(default_factory=list)

    def __len__(self):
        return len(self.vertex)

    def rows(self):
        for e in range(len(self)):
            yield {
                "ridge": [int(x) for x in self.ridges[e]],
                "facets": [int(x) for x in self.facets[e]],
                "vertex": int(self.vertex[e]),
                "margin": str(TwoLevel(Fraction(int(self.base_margin[e]), self.base_scale),
                                       Fraction(int(self.eps_margin[e]), self.eps_scale))),
            }


def _as_column(values) -> np.ndarray:
    if max((abs(v) for v in values), default=0) < 2**31:
        return np.array(values, dtype=np.int64)
    out = np.empty(len(values), dtype=object)
    out[:] = list(values)
    return out


def _signs(d) -> np.ndarray:
    return np.array([1 if x > 0 else -1 for x in d.tolist()], dtype=np.int64)


def _margin(d, lift_q, lift, rows, y):
    """``sign(d) * (d * lift_q - sum_k lift[rows[:, k]] * y[:, k])``, exactly."""
    lf = lift[rows]
    arrays = (d, lift_q, lf, y)
    if all(x.dtype != object for x in arrays):
        top = [int(np.abs(x).max(initial=0)) for x in arrays]
        if max(top[0] * top[1], top[2] * top[3] * y.shape[1]) < 2**61:
            return (d * lift_q - (lf * y).sum(axis=1)) * _signs(d)
    d, lift_q, lf, y = (x.astype(object) for x in arrays)
    return (d * lift_q - (lf * y).sum(axis=1)) * _signs(d)


def _check_points(K: Triangulation, facet_idx, points, lb, le, full):
    """Margins of ``points[i]`` over the hyperplane of ``facet_idx[i]``, chunked by facet."""
    facets = K.facets
    h = K.config.homogeneous
    base = np.zeros(len(points), dtype=object)
    eps = np.zeros(len(points), dtype=object)
    order = np.argsort(facet_idx, kind="stable")
    fsorted = facet_idx[order]
    for start in range(0, len(facets), _CHUNK):
        lo, hi = np.searchsorted(fsorted, [start, start + _CHUNK])
        if lo == hi:
            continue
        sel = order[lo:hi]
        chunk = facets[start:start + _CHUNK]
        d, X = batch_scaled_inverse(np.transpose(h[chunk], (0, 2, 1)))
        local = facet_idx[sel] - start
        qhat = h[points[sel]]
        Xs = X[local]
        if Xs.dtype == object or qhat.dtype == object:
            y = (Xs.astype(object) * qhat.astype(object)[:, None, :]).sum(axis=2)
        else:
            y = np.einsum("ekj,ej->ek", Xs, qhat)
        rows = chunk[local]
        dd = d[local]
        mb = _margin(dd, lb[points[sel]], lb, rows, y)
        base[sel] = mb
        need = np.ones(len(sel), dtype=bool) if full else (mb == 0)
        if need.any():
            idx = np.nonzero(need)[0]
            me = _margin(dd[idx], le[points[sel][idx]], le, rows[idx], y[idx])
            eps[sel[idx]] = me
    return base, eps


def _margins(K: Triangulation, full: bool = False):
    if K.lifting is None:
        raise MissingLifting("triangulation has no lifting")
    graph = K.dual_graph
    ib, ie = K.lifting.integer_channels()
    lb, le = _as_column(ib), _as_column(ie)
    a = graph.edges[:, 0]
    w = graph.opposite[:, 1]
    base, eps = _check_points(K, a, w, lb, le, full)
    unused = np.setdiff1d(np.arange(len(K.config)), K.used_vertices())
    extra = []
    if unused.size and len(K):
        ff = np.repeat(np.arange(len(K)), unused.size)
        qq = np.tile(unused, len(K))
        ub, ue = _check_points(K, ff, qq, lb, le, full)
        extra = (ff, qq, ub, ue)
    return graph, base, eps, extra


def _scales(lifting: TwoLevelLifting) -> tuple[int, int]:
    return lcm_denominator(lifting.base), lcm_denominator(lifting.eps)


def _raise_first_failure(base, eps, witness):
    if not len(base):
        return
    ok = (base > 0) | ((base == 0) & (eps > 0))
    if ok.all():
        return
    e = int(np.argmin(ok))
    ridge, pair = witness(e)
    if base[e] == 0 and eps[e] == 0:
        raise DegenerateLifting(ridge, pair)
    raise NotLocallyConvex(ridge, pair)


def induces_triangulation(K: Triangulation, full: bool = False) -> RegularityCertificate:
    """Certify that ``K.lifting`` induces ``K``.

    Raises :class:`NotLocallyConvex` at the first ridge (in sorted order) where
    the lifting bends the wrong way and :class:`DegenerateLifting` where it is
    flat. Unused points must lift strictly above every facet hyperplane.
    """
    graph, base, eps, extra = _margins(K, full)
    _raise_first_failure(base, eps, lambda e: (graph.ridges[e].tolist(), graph.edges[e].tolist()))
    unused_report = []
    if extra:
        ff, qq, ub, ue = extra
        _raise_first_failure(ub, ue, lambda i: ([int(qq[i])], [int(ff[i])]))
        unused_report = sorted(set(qq.tolist()))
    lb, le = _scales(K.lifting)
    return RegularityCertificate(
        ridges=graph.ridges,
        facets=graph.edges,
        vertex=graph.opposite[:, 1],
        base_margin=base,
        eps_margin=eps,
        base_scale=lb,
        eps_scale=le,
        unused_points=unused_report,
    )


def is_regular(K: Triangulation) -> bool:
    try:
        induces_triangulation(K)
    except (NotLocallyConvex, DegenerateLifting):
        return False
    return True


def flatten_lifting(K: Triangulation) -> TwoLevelLifting:
    """A single-level integer lifting inducing ``K``, from a certified two-level one.

    With both channels scaled to integers ``b`` and ``e``, the heights
    ``N * b + e`` work for every ``N`` exceeding ``-e_margin / b_margin`` on
    each ridge with a positive base margin.
    """
    graph, base, eps, extra = _margins(K, full=True)
    _raise_first_failure(base, eps, lambda e: (graph.ridges[e].tolist(), graph.edges[e].tolist()))
    margins = list(zip(base.tolist(), eps.tolist()))
    if extra:
        _raise_first_failure(extra[2], extra[3], lambda i: ([int(extra[1][i])], [int(extra[0][i])]))
        margins += list(zip(extra[2].tolist(), extra[3].tolist()))
    big = max([1] + [(-s) // b + 1 for b, s in margins if b > 0])
    ib, ie = K.lifting.integer_channels()
    return TwoLevelLifting([big * x + y for x, y in zip(ib, ie)])


def product_lifting(lam, mu, order_k, order_l, mode: str = "lexrev") -> TwoLevelLifting:
    """Lifting of the product configuration inducing the simplicial product.

    The base channel is ``lam(v) + mu(w)``. The eps channel is ``2^O(v, w)``
    with ``O`` the lexicographic order with the second factor reversed
    (``mode="lexrev"``), or ``2^((n+1) c(v) + n - c(w))`` from the colourings
    (``mode="color"``).
    """
    lam = lam if isinstance(lam, TwoLevelLifting) else TwoLevelLifting(lam)
    mu = mu if isinstance(mu, TwoLevelLifting) else TwoLevelLifting(mu)
    if not (lam.single_level and mu.single_level):
        raise ValueError("factor liftings must be single-level; flatten them first")
    nk, nl = len(lam), len(mu)
    base = [lam.base[v] + mu.base[w] for v in range(nk) for w in range(nl)]
    if mode == "lexrev":
        rk, rl = order_k.rank.tolist(), order_l.rank.tolist()
        eps = [2 ** (nl * rk[v] + (nl - 1 - rl[w])) for v in range(nk) for w in range(nl)]
    elif mode == "color":
        if order_k.colors is None or order_l.colors is None:
            raise MissingColoring("colour mode needs coloured orderings")
        n = order_l.dim
        ck, cl = order_k.colors, order_l.colors
        eps = [2 ** ((n + 1) * ck[v] + (n - cl[w])) for v in range(nk) for w in range(nl)]
    else:
        raise ValueError(f"unknown product lifting mode {mode!r}")
    return TwoLevelLifting(base, eps)
