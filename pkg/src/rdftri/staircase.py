"""Staircase triangulations of products of two simplices.

Vertex ``(e_i, e_j)`` of ``Δ_m × Δ_n`` has index ``i * (n + 1) + j``. A facet
is a monotone lattice path from ``(0, 0)`` to ``(m, n)`` in the grid, written
as a shuffle: a bit string with ``m`` ones ("right", ``i += 1``) and ``n``
zeros ("up", ``j += 1``).
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations

import numpy as np

from .complex import Triangulation
from .errors import MalformedShuffle
from .lattice import product_configuration, simplex
from .lifting import TwoLevelLifting


def shuffles(m: int, n: int) -> list[str]:
    """All shuffles with ``m`` ones and ``n`` zeros, in lexicographic order."""
    out = []
    for ones in combinations(range(m + n), m):
        bits = ["0"] * (m + n)
        for p in ones:
            bits[p] = "1"
        out.append("".join(bits))
    return sorted(out)


def _bits(shuffle) -> list[int]:
    if isinstance(shuffle, str):
        if set(shuffle) - {"0", "1"}:
            raise MalformedShuffle(f"shuffle {shuffle!r} must consist of 0s and 1s")
        return [int(c) for c in shuffle]
    bits = [int(b) for b in shuffle]
    if set(bits) - {0, 1}:
        raise MalformedShuffle(f"shuffle {shuffle!r} must consist of 0s and 1s")
    return bits


def shuffle_path(shuffle) -> list[tuple[int, int]]:
    """Grid points ``(i, j)`` visited by the path, starting at the origin."""
    i = j = 0
    path = [(0, 0)]
    for b in _bits(shuffle):
        if b:
            i += 1
        else:
            j += 1
        path.append((i, j))
    return path


def shuffle_to_svector(shuffle, m: int | None = None, n: int | None = None) -> tuple[int, ...]:
    """``s_k`` is the number of zeros preceding the ``k``-th one."""
    bits = _bits(shuffle)
    ones = [p for p, b in enumerate(bits) if b]
    if m is not None and len(ones) != m:
        raise MalformedShuffle(f"shuffle has {len(ones)} ones, expected {m}")
    if n is not None and len(bits) - len(ones) != n:
        raise MalformedShuffle(f"shuffle has {len(bits) - len(ones)} zeros, expected {n}")
    return tuple(p - k for k, p in enumerate(ones))


def svector_to_shuffle(s, n: int) -> str:
    s = list(s)
    if any(a > b for a, b in zip(s, s[1:])) or (s and (s[0] < 0 or s[-1] > n)):
        raise MalformedShuffle(f"{s} is not a nondecreasing sequence in [0, {n}]")
    bits = []
    zeros = 0
    for x in s:
        bits += ["0"] * (x - zeros) + ["1"]
        zeros = x
    bits += ["0"] * (n - zeros)
    return "".join(bits)


@lru_cache(maxsize=None)
def path_templates(m: int, n: int) -> np.ndarray:
    """Array ``(C(m+n, m), m+n+1, 2)`` of grid positions of every staircase path."""
    paths = [shuffle_path(s) for s in shuffles(m, n)]
    arr = np.array(paths, dtype=np.int64).reshape(len(paths), m + n + 1, 2)
    arr.setflags(write=False)
    return arr


def lexrev_exponent(i: int, j: int, n: int) -> int:
    return (n + 1) * i + (n - j)


def staircase(m: int, n: int, lifting: bool = True) -> Triangulation:
    """The staircase triangulation with its colouring ``i + j`` and lexrev lifting ``2^O``."""
    config = product_configuration(simplex(m), simplex(n))
    t = path_templates(m, n)
    facets = t[:, :, 0] * (n + 1) + t[:, :, 1]
    coloring = [i + j for i in range(m + 1) for j in range(n + 1)]
    lift = None
    if lifting:
        lift = TwoLevelLifting([2 ** lexrev_exponent(i, j, n) for i in range(m + 1) for j in range(n + 1)])
    return Triangulation(config, facets, coloring=coloring, lifting=lift)


def facet_to_shuffle(facet, n: int) -> str:
    """Recover the shuffle of a staircase facet given by vertex indices."""
    cells = sorted(divmod(int(v), n + 1) for v in facet)
    bits = []
    for (i0, j0), (i1, j1) in zip(cells, cells[1:]):
        if (i1 - i0, j1 - j0) == (1, 0):
            bits.append("1")
        elif (i1 - i0, j1 - j0) == (0, 1):
            bits.append("0")
        else:
            raise MalformedShuffle(f"facet {tuple(facet)} is not a monotone path")
    return "".join(bits)


def svector_grid(m: int, n: int):
    """Nodes and edges of the unit-grid graph on nondecreasing vectors in ``[0, n]^m``."""
    nodes = sorted(shuffle_to_svector(s) for s in shuffles(m, n))
    present = set(nodes)
    edges = set()
    for s in nodes:
        for k in range(m):
            t = s[:k] + (s[k] + 1,) + s[k + 1:]
            if t in present:
                edges.add((s, t))
    return nodes, edges


def staircase_signature(m: int, n: int) -> int:
    """Closed form for the signature of the staircase triangulation."""
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    if m == 0 or n == 0:
        return 1
    if m % 2 and n % 2:
        return 0
    return math.comb(m // 2 + n // 2, m // 2)


@lru_cache(maxsize=None)
def _signed_recursive(m: int, n: int) -> int:
    if m == 0 or n == 0:
        return 1
    return _signed_recursive(m, n - 1) + (-1) ** n * _signed_recursive(m - 1, n)


def staircase_signature_recursive(m: int, n: int) -> int:
    """Signature via ``σ(m, n) = σ(m, n-1) + (-1)^n σ(m-1, n)`` on signed values."""
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    return abs(_signed_recursive(m, n))
