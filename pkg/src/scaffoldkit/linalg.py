"""
Gaussian elimination over a valued field with truncated entries.

Works for any entry type exposing ``val()``, ``inverse()`` and ring
operators (:class:`TruncatedSeries`, :class:`ExtElement`).  The pivot in each
column is the entry of least *exact* valuation; ties go to the lowest row so
results are deterministic.
"""

from __future__ import annotations

from .errors import InsufficientPrecision


def _pivot(rows, col, start):
    best = None
    for r in range(start, len(rows)):
        v = rows[r][col].val()
        if not v.exact:
            continue
        if best is None or v.value < best[1]:
            best = (r, v.value)
    if best is None:
        raise InsufficientPrecision(f"no pivot of exact valuation in column {col}")
    return best[0]


def solve(matrix, rhs, inverse=None):
    """Solve ``matrix @ X = rhs``.

    ``matrix`` is a list of n rows of length n, ``rhs`` a list of n rows of
    length r.  Returns X as n rows of length r.  ``inverse`` overrides how a
    pivot is inverted (e.g. to pass a working cap).
    """
    n = len(matrix)
    inv = inverse or (lambda x: x.inverse())
    rows = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        piv = _pivot(rows, col, col)
        rows[col], rows[piv] = rows[piv], rows[col]
        pinv = inv(rows[col][col])
        rows[col] = [x * pinv for x in rows[col]]
        for r in range(n):
            if r == col:
                continue
            f = rows[r][col]
            if f.is_zero():
                continue
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [row[n:] for row in rows]


def det(matrix, inverse=None):
    """Determinant by the same elimination (product of pivots, with sign)."""
    n = len(matrix)
    inv = inverse or (lambda x: x.inverse())
    rows = [list(r) for r in matrix]
    result = None
    sign = 1
    for col in range(n):
        piv = _pivot(rows, col, col)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        p = rows[col][col]
        result = p if result is None else result * p
        pinv = inv(p)
        for r in range(col + 1, n):
            f = rows[r][col]
            if f.is_zero():
                continue
            g = f * pinv
            rows[r] = [a - g * b for a, b in zip(rows[r], rows[col])]
    return result if sign == 1 else -result
