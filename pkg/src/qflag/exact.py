"""
Exact rational elimination for sparse integer matrices.

Only what the Monk systems need: the rank of an integer matrix and an
integer left inverse ``L`` with common denominator ``D`` such that
``L @ A == D * I`` whenever ``A`` has full column rank.  Rows are kept as
``{column: Fraction}`` dicts and pivots are chosen among the sparsest
candidate rows to limit fill-in.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

__all__ = ["RankDeficientError", "rank", "integer_left_inverse"]


class RankDeficientError(ArithmeticError):
    pass


def _sparse_rows(matrix: list, augment: bool) -> list:
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = []
    for i, row in enumerate(matrix):
        r = {c: Fraction(x) for c, x in enumerate(row) if x}
        if augment:
            r[ncols + i] = Fraction(1)
        rows.append(r)
    return rows


def _eliminate(rows: list, ncols: int) -> list:
    """Gauss-Jordan in place over the first ncols columns.
    Returns the pivot row index for each column (None where there is no pivot)."""
    pivots = [None] * ncols
    free = set(range(len(rows)))
    for c in range(ncols):
        candidates = [i for i in free if c in rows[i]]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: (len(rows[i]), i))
        free.discard(p)
        prow = rows[p]
        piv = prow[c]
        if piv != 1:
            prow = rows[p] = {k: x / piv for k, x in prow.items()}
        for i, row in enumerate(rows):
            if i == p:
                continue
            f = row.get(c)
            if f is None:
                continue
            for k, x in prow.items():
                v = row.get(k, 0) - f * x
                if v:
                    row[k] = v
                else:
                    row.pop(k, None)
        pivots[c] = p
    return pivots


def rank(matrix: list) -> int:
    if not matrix:
        return 0
    rows = _sparse_rows(matrix, augment=False)
    return sum(p is not None for p in _eliminate(rows, len(matrix[0])))


def integer_left_inverse(matrix: list) -> tuple:
    """Return ``(L, D)`` with integer L (ncols x nrows) and ``L A = D I``.

    Raises RankDeficientError if A does not have full column rank.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = _sparse_rows(matrix, augment=True)
    pivots = _eliminate(rows, ncols)
    missing = [c for c, p in enumerate(pivots) if p is None]
    if missing:
        raise RankDeficientError(
            f"rank {ncols - len(missing)} < {ncols} columns; free columns {missing}")
    left = []
    for p in pivots:
        row = [Fraction(0)] * nrows
        for k, x in rows[p].items():
            if k >= ncols:
                row[k - ncols] = x
        left.append(row)
    denom = lcm(*(x.denominator for row in left for x in row)) if left else 1
    return [[int(x * denom) for x in row] for row in left], denom
