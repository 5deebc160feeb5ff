"""Pure-Python (numpy) fallback for the mod-p point-count kernel.

Batched Gaussian elimination over F_p across a whole block of points at
once; slower than the compiled kernel by a sizable constant factor but
algorithmically identical in output.
"""

from __future__ import annotations

import numpy as np


def _batched_rank(M: np.ndarray, p: int, inv: np.ndarray) -> np.ndarray:
    B, nr, nc = M.shape
    M = M.copy()
    rank = np.zeros(B, dtype=np.int64)
    rows = np.arange(nr)[None, :]
    bsel = np.arange(B)
    for c in range(nc):
        live = rows >= rank[:, None]
        nz = (M[:, :, c] != 0) & live
        has = nz.any(axis=1)
        piv = np.where(has, nz.argmax(axis=1), 0)
        r0 = rank.copy()
        prow = M[bsel, piv, :].copy()
        M[bsel, piv, :] = np.where(has[:, None], M[bsel, r0, :], prow)
        M[bsel, r0, :] = np.where(has[:, None], prow, M[bsel, r0, :])
        pinv = inv[M[bsel, r0, c]] * has
        below = rows > r0[:, None]
        factors = np.where(below & has[:, None], (M[:, :, c] * pinv[:, None]) % p, 0)
        M = (M - factors[:, :, None] * M[bsel, r0, :][:, None, :]) % p
        rank += has
    return rank


def count_low_rank_range(tables, p: int, rank_lt: int, start: int, stop: int,
                         batch: int = 1 << 14) -> int:
    T = np.ascontiguousarray(tables, dtype=np.int64) % p
    n = T.shape[0]
    if T.shape[2] != n:
        raise ValueError("tables must have shape (n, m, n)")
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    count = 0
    for lo in range(start, stop, batch):
        idx = np.arange(lo, min(lo + batch, stop), dtype=np.int64)
        digits = np.empty((len(idx), n), dtype=np.int64)
        rem = idx.copy()
        for k in range(n):
            digits[:, k] = rem % p
            rem //= p
        M = np.tensordot(digits, T, axes=([1], [0])) % p
        ranks = _batched_rank(M, p, inv)
        count += int((ranks < rank_lt).sum())
    return count
