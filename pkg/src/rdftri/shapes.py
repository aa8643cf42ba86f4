"""Small named triangulations used as factors and test cases."""

from __future__ import annotations

from .complex import Triangulation
from .lattice import cube, segment, sharp_simplex


def unit_segment() -> Triangulation:
    """``[0, 1]`` as a single edge."""
    return Triangulation(cube(1), [(0, 1)], coloring=(0, 1), lifting=(0, 0))


def dense_segment(k: int, l: int) -> Triangulation:
    """``[k, l]`` cut at every integer, lifted by ``(x - k)^2``."""
    config = segment(k, l)
    facets = [(i, i + 1) for i in range(l - k)]
    return Triangulation(config, facets, coloring=[i % 2 for i in range(l - k + 1)],
                         lifting=[i * i for i in range(l - k + 1)])


def sharp_triangulation(m: int, k: int) -> Triangulation:
    """The dense triangulation of ``sharp_simplex(m, k)``.

    In the plane the interior points ``(1,1), ..., (k,1)`` are joined to both
    ``(1,0)`` and ``(2k,2)``, leaving one triangle ``(k,1), (1,0), (2k,2)``.
    Every triangle is unimodular. Higher dimensions cone with the new apex.
    """
    config = sharp_simplex(m, k)
    low, high = 1, 2
    row = [0] + [2 + i for i in range(1, k + 1)]
    facets = []
    for i in range(k):
        facets.append((low, row[i], row[i + 1]))
        facets.append((high, row[i], row[i + 1]))
    facets.append((row[k], low, high))
    for d in range(3, m + 1):
        facets = [f + (k + d,) for f in facets]
    return Triangulation(config, facets)
