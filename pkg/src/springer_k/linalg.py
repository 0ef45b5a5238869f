"""Exact rank by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = lcm(*(v.denominator for v in fr)) if fr else 1
        out.append([int(v * den) for v in fr])
    return out


def exact_rank(matrix: Sequence[Sequence]) -> int:
    """Rank over Q of a matrix with integer or Fraction entries."""
    a = _integer_rows(matrix)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row, top = a[r], a[rank]
            # Bareiss step: the division by the previous pivot is exact
            for c in range(col, ncols):
                row[c] = (p * row[c] - f * top[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant via the same elimination (square integer input)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
