"""Exact integer linear algebra.

Everything here is fraction-free: Bareiss elimination keeps every
intermediate value an integer minor of the input, so divisions are exact.
Batched routines run on ``int64`` arrays when a Hadamard bound proves that
no intermediate product can overflow, and otherwise fall back to ``object``
arrays of Python integers. Both paths execute the same code.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

# Bareiss forms products of two minors; keep them below 2**62.
_INT64_MINOR_LIMIT = 2**30


def det(matrix) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    a = [[int(x) for x in row] for row in matrix]
    k = len(a)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(k - 1):
        if a[c][c] == 0:
            for r in range(c + 1, k):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        p = a[c][c]
        rc = a[c]
        for r in range(c + 1, k):
            rr = a[r]
            f = rr[c]
            for j in range(c + 1, k):
                rr[j] = (p * rr[j] - f * rc[j]) // prev
        prev = p
    return sign * a[k - 1][k - 1]


def fraction_det(matrix) -> Fraction:
    """Determinant of a square rational matrix by Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in matrix]
    k = len(a)
    result = Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        p = a[c][c]
        result *= p
        for r in range(c + 1, k):
            f = a[r][c] / p
            if f:
                for j in range(c, k):
                    a[r][j] -= f * a[c][j]
    return result


def hadamard_bound(mats: np.ndarray) -> float:
    """Upper bound on |minor| over all minors of every matrix in a batch."""
    if mats.size == 0:
        return 1.0
    m = np.abs(mats.astype(float))
    norms = np.sqrt((m * m).sum(axis=-1))
    norms = np.maximum(norms, 1.0)
    return float(np.exp(np.log(norms).sum(axis=-1).max()))


def _work_array(mats) -> np.ndarray:
    arr = np.asarray(mats)
    if arr.dtype != object and hadamard_bound(arr) < _INT64_MINOR_LIMIT:
        return arr.astype(np.int64, copy=True)
    out = np.empty(arr.shape, dtype=object)
    flat = out.reshape(-1)
    flat[:] = [int(x) for x in arr.reshape(-1).tolist()]
    return out


def batch_det(mats) -> np.ndarray:
    """Determinants of a batch ``(B, k, k)`` of integer matrices."""
    a = _work_array(mats)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError("expected a batch of square matrices")
    b, k, _ = a.shape
    if k == 0:
        return np.ones(b, dtype=a.dtype)
    sign = np.ones(b, dtype=a.dtype)
    prev = np.ones(b, dtype=a.dtype)
    singular = np.zeros(b, dtype=bool)
    rows = np.arange(b)
    for c in range(k):
        nz = a[:, c:, c] != 0
        has = nz.any(axis=1)
        singular |= ~has
        piv = c + nz.argmax(axis=1)
        swap = np.nonzero(has & (piv != c))[0]
        if swap.size:
            tmp = a[swap, c].copy()
            a[swap, c] = a[swap, piv[swap]]
            a[swap, piv[swap]] = tmp
            sign[swap] = -sign[swap]
        p = a[rows, c, c].copy()
        p[~has] = 1
        if c + 1 < k:
            sub = a[:, c + 1:, c + 1:]
            a[:, c + 1:, c + 1:] = (
                p[:, None, None] * sub - a[:, c + 1:, c:c + 1] * a[:, c:c + 1, c + 1:]
            ) // prev[:, None, None]
        prev = p
    out = sign * a[:, k - 1, k - 1]
    out[singular] = 0
    return out


def batch_scaled_inverse(mats):
    """Fraction-free Gauss-Jordan on a batch of nonsingular matrices.

    Returns ``(d, X)`` with ``X = d * inverse(M)`` an integer matrix and
    ``d = ±det(M)``. Raises ``ZeroDivisionError`` if any matrix is singular.
    """
    arr = np.asarray(mats)
    b, k, _ = arr.shape
    aug = np.zeros((b, k, 2 * k), dtype=arr.dtype if arr.dtype != object else object)
    aug[:, :, :k] = arr
    aug[:, np.arange(k), k + np.arange(k)] = 1
    a = _work_array(aug)
    prev = np.ones(b, dtype=a.dtype)
    rows = np.arange(b)
    for c in range(k):
        nz = a[:, c:, c] != 0
        if not nz.any(axis=1).all():
            raise ZeroDivisionError("singular matrix in batch")
        piv = c + nz.argmax(axis=1)
        swap = np.nonzero(piv != c)[0]
        if swap.size:
            tmp = a[swap, c].copy()
            a[swap, c] = a[swap, piv[swap]]
            a[swap, piv[swap]] = tmp
        p = a[rows, c, c].copy()
        pivot_row = a[:, c:c + 1, :].copy()
        col = a[:, :, c:c + 1].copy()
        a = (p[:, None, None] * a - col * pivot_row) // prev[:, None, None]
        a[:, c, :] = pivot_row[:, 0, :]
        prev = p
    return prev, a[:, :, k:]


def elementary_divisors(matrix) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix."""
    a = [[int(x) for x in row] for row in matrix]
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    divisors = []
    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors


def rank_gf2(matrix) -> int:
    """Rank of an integer matrix reduced modulo two."""
    rows = [int("".join("1" if int(x) % 2 else "0" for x in row) or "0", 2) for row in matrix]
    rank = 0
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            break
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
    return rank


def rank_rational(matrix) -> int:
    a = [[Fraction(x) for x in row] for row in matrix]
    if not a:
        return 0
    rank = 0
    cols = len(a[0])
    for c in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def solvable_gf2(matrix, rhs) -> bool:
    """Whether ``matrix @ x = rhs`` has a solution over the field with two elements."""
    m = [list(row) for row in matrix]
    aug = [[int(x) % 2 for x in row] + [int(r) % 2] for row, r in zip(m, rhs)]
    return rank_gf2([row[:-1] for row in aug]) == rank_gf2(aug)


def lcm_denominator(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out
