"""
Dense kernels for exactly known elements.

A block is ``(offset, array)``: row ``i`` of the array holds the codes of a
Laurent polynomial whose column 0 is the coefficient of ``t^offset``.  These
kernels only ever see exact data (cap INF), so no precision bookkeeping is
needed; callers fall back to :class:`TruncatedSeries` arithmetic otherwise.
"""

from __future__ import annotations

import numpy as np

from .series import INF, TruncatedSeries


def to_block(coords):
    """Block for a sequence of exact series, or None if any is truncated."""
    lo = hi = None
    for c in coords:
        if c.cap != INF:
            return None
        if len(c.coeffs):
            lo = c.start if lo is None else min(lo, c.start)
            hi = c.end if hi is None else max(hi, c.end)
    if lo is None:
        return 0, np.zeros((len(coords), 1), dtype=np.int64)
    arr = np.zeros((len(coords), hi - lo), dtype=np.int64)
    for i, c in enumerate(coords):
        if len(c.coeffs):
            arr[i, c.start - lo : c.end - lo] = c.coeffs
    return lo, arr


def from_block(F, block):
    off, arr = block
    return tuple(TruncatedSeries(F, row, off) for row in arr)


def trim(block):
    off, arr = block
    cols = np.flatnonzero(arr.any(axis=0))
    if not len(cols):
        return 0, arr[:, :1] * 0
    return off + int(cols[0]), arr[:, cols[0] : cols[-1] + 1]


def is_zero(block) -> bool:
    return not block[1].any()


def widen(block, lo, hi):
    off, arr = block
    if off == lo and arr.shape[1] == hi - lo:
        return arr
    out = np.zeros((arr.shape[0], hi - lo), dtype=np.int64)
    out[:, off - lo : off - lo + arr.shape[1]] = arr
    return out


def add(F, x, y):
    lo = min(x[0], y[0])
    hi = max(x[0] + x[1].shape[1], y[0] + y[1].shape[1])
    a, b = widen(x, lo, hi), widen(y, lo, hi)
    if F.m == 1:
        return lo, (a + b) % F.p
    return lo, F.ADD[a, b]


def stack(blocks):
    lo = min(b[0] for b in blocks)
    hi = max(b[0] + b[1].shape[1] for b in blocks)
    return lo, np.vstack([widen(b, lo, hi) for b in blocks])


def kron_product(F, x, y, p):
    """Unreduced product of two blocks of ``p`` rows viewed as polynomials
    in one variable; returns ``2p - 1`` rows.  One convolution, by
    Kronecker substitution with stride wide enough to avoid overlap."""
    X, Y = x[1], y[1]
    W = X.shape[1] + Y.shape[1] - 1
    xf = np.zeros((p, W), dtype=np.int64)
    yf = np.zeros((p, W), dtype=np.int64)
    xf[:, : X.shape[1]] = X
    yf[:, : Y.shape[1]] = Y
    cf = F.convolve(xf.ravel(), yf.ravel())
    out = np.zeros((2 * p - 1) * W, dtype=np.int64)
    # anything past the last row is zero padding
    out[: min(len(cf), len(out))] = cf[: len(out)]
    return x[0] + y[0], out.reshape(2 * p - 1, W)


def scale_rows(F, w, block):
    """Every row of ``block`` times the one-row block ``w``."""
    (ow, wa), (ob, B) = w, block
    r = B.shape[0]
    W = B.shape[1] + wa.shape[1] - 1
    bf = np.zeros((r, W), dtype=np.int64)
    bf[:, : B.shape[1]] = B
    cf = F.convolve(bf.ravel(), wa[0])
    out = np.zeros(r * W, dtype=np.int64)
    out[: min(len(cf), len(out))] = cf[: len(out)]
    return ow + ob, out.reshape(r, W)


def matvec(F, M, y):
    """``out[i] = sum_j M[i, j] * y[j]`` for a block matrix ``M = (off, arr[i, j, :])``
    and a block vector ``y``; prime fields only."""
    om, A = M
    oy, Y = y
    n, _, L = A.shape
    K = Y.shape[1]
    toe = np.zeros((n, L, L + K - 1))
    for k in range(L):
        toe[:, k, k : k + K] = Y
    # entries stay far below 2^53, so the float product is exact
    out = A.reshape(n, n * L).astype(float) @ toe.reshape(n * L, L + K - 1)
    return om + oy, np.rint(out).astype(np.int64) % F.p


def matrix_block(columns):
    """Block matrix from ``columns[j][i]`` series, or None if any is truncated."""
    n = len(columns)
    flat = [columns[j][i] for i in range(n) for j in range(n)]
    b = to_block(flat)
    if b is None:
        return None
    off, arr = b
    return off, arr.reshape(n, n, arr.shape[1])
