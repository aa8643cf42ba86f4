"""Lattice point configurations, normalized volumes and standard shapes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DegenerateSimplex, UnsupportedShape
from .linalg import det

Facet = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class PointConfiguration:
    """Distinct lattice points in ``Z^dim``.

    ``facets`` is an optional integral description ``normal . x + offset >= 0``
    of the convex hull with primitive inward normals. ``volume`` is the
    normalized volume of the hull when it is known from the construction.
    """

    dim: int
    points: tuple[tuple[int, ...], ...]
    facets: tuple[Facet, ...] | None = None
    volume: int | None = None

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        if self.facets is not None:
            facets = tuple((tuple(int(x) for x in n), int(b)) for n, b in self.facets)
            object.__setattr__(self, "facets", facets)
            for normal, offset in facets:
                if len(normal) != self.dim:
                    raise ValueError(f"facet normal {normal} has wrong length")
                if math.gcd(*normal) != 1:
                    raise ValueError(f"facet normal {normal} is not primitive")
                for p in pts:
                    if sum(a * x for a, x in zip(normal, p)) + offset < 0:
                        raise ValueError(f"point {p} violates facet {normal}, {offset}")

    def __len__(self):
        return len(self.points)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def coords(self) -> np.ndarray:
        """Points as an ``(N, dim)`` array; ``object`` dtype if any entry is huge."""
        big = any(abs(x) >= 2**40 for p in self.points for x in p)
        arr = np.array(self.points, dtype=object if big else np.int64)
        return arr.reshape(len(self.points), self.dim)

    @cached_property
    def homogeneous(self) -> np.ndarray:
        """Points with a leading 1, shape ``(N, dim + 1)``."""
        ones = np.ones((len(self.points), 1), dtype=self.coords.dtype)
        return np.hstack([ones, self.coords])


def normalized_volume(config: PointConfiguration, simplex) -> int:
    """``|det(v_1 - v_0, ..., v_m - v_0)|`` for a full-dimensional simplex."""
    idx = list(simplex)
    if len(idx) != config.dim + 1:
        raise DegenerateSimplex(f"simplex {idx} is not full-dimensional in dimension {config.dim}")
    v0 = config.points[idx[0]]
    rows = [[a - b for a, b in zip(config.points[i], v0)] for i in idx[1:]]
    d = det(rows)
    if d == 0:
        raise DegenerateSimplex(f"simplex {idx} has affinely dependent vertices")
    return abs(d)


def product_configuration(p: PointConfiguration, q: PointConfiguration) -> PointConfiguration:
    """Cartesian product; point ``(i, j)`` gets index ``i * len(q) + j``."""
    points = [a + b for a in p.points for b in q.points]
    facets = None
    if p.facets is not None and q.facets is not None:
        facets = [(n + (0,) * q.dim, b) for n, b in p.facets]
        facets += [((0,) * p.dim + n, b) for n, b in q.facets]
    volume = None
    if p.volume is not None and q.volume is not None:
        volume = p.volume * q.volume * math.comb(p.dim + q.dim, p.dim)
    facets = tuple(facets) if facets is not None else None
    return PointConfiguration(p.dim + q.dim, tuple(points), facets, volume)


def simplex(m: int) -> PointConfiguration:
    """Standard simplex ``conv(0, e_1, ..., e_m)``; point ``i`` is ``e_i`` with ``e_0 = 0``."""
    if m < 0:
        raise UnsupportedShape("simplex dimension must be nonnegative")
    pts = [tuple(0 for _ in range(m))]
    pts += [tuple(int(i == j) for j in range(m)) for i in range(m)]
    facets = [(tuple(int(i == j) for j in range(m)), 0) for i in range(m)]
    if m:
        facets.append((tuple(-1 for _ in range(m)), 1))
    return PointConfiguration(m, tuple(pts), tuple(facets), 1)


def cube(d: int) -> PointConfiguration:
    """``[0,1]^d``; point ``h`` has coordinate ``x_{i+1}`` equal to bit ``i`` of ``h``."""
    if d < 0:
        raise UnsupportedShape("cube dimension must be nonnegative")
    pts = [tuple((h >> i) & 1 for i in range(d)) for h in range(2**d)]
    facets = []
    for i in range(d):
        e = tuple(int(i == j) for j in range(d))
        facets.append((e, 0))
        facets.append((tuple(-x for x in e), 1))
    return PointConfiguration(d, tuple(pts), tuple(facets), math.factorial(d))


def segment(k: int, l: int) -> PointConfiguration:
    if not l > k:
        raise UnsupportedShape(f"segment needs k < l, got [{k}, {l}]")
    pts = tuple((x,) for x in range(k, l + 1))
    return PointConfiguration(1, pts, (((1,), -k), ((-1,), l)), l - k)


def sharp_simplex(m: int, k: int) -> PointConfiguration:
    """All lattice points of the thin simplex with a single dense triangulation.

    In the plane this is ``conv((0,1), (1,0), (2k,2))`` whose interior points are
    ``(1,1), ..., (k,1)``; higher dimensions cone over the previous one with
    apex ``e_m``.
    """
    if m < 2 or k < 1:
        raise UnsupportedShape("sharp_simplex needs m >= 2 and k >= 1")
    pts = [(0, 1), (1, 0), (2 * k, 2)] + [(i, 1) for i in range(1, k + 1)]
    for d in range(3, m + 1):
        pts = [p + (0,) for p in pts] + [tuple(int(j == d - 1) for j in range(d))]
    return PointConfiguration(m, tuple(pts), None, 2 * k + 1)


def standard_shape(kind: str, *params: int) -> PointConfiguration:
    builders = {"simplex": simplex, "cube": cube, "segment": segment, "sharp_simplex": sharp_simplex}
    try:
        builder = builders[kind]
    except KeyError:
        raise UnsupportedShape(f"unknown shape {kind!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise UnsupportedShape(f"bad parameters for {kind}: {params}") from exc

