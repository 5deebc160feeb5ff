"""Mod-p point-count kernel with backend selection at import.

The compiled Cython kernel is preferred; the numpy fallback is used when
the extension is unavailable or COMMVAR_KERNEL=fallback is set.  Both
expose count_low_rank_range(tables, p, rank_lt, start, stop) with
identical semantics; counting partitions into index ranges and reduces by
summation, so results are independent of the split.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from . import pyfallback

_forced = os.environ.get("COMMVAR_KERNEL", "").lower()

if _forced == "fallback":
    _native = None
else:
    try:
        from . import _native
    except ImportError:
        if _forced == "native":
            raise
        _native = None

BACKEND = "native" if _native is not None else "fallback"


def count_low_rank_range(tables, p, rank_lt, start, stop):
    if _native is not None:
        import numpy as np
        arr = np.ascontiguousarray(tables, dtype=np.int64) % p
        return _native.count_low_rank_range(arr, p, rank_lt, start, stop)
    return pyfallback.count_low_rank_range(tables, p, rank_lt, start, stop)


def default_workers() -> int:
    env = os.environ.get("COMMVAR_WORKERS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


_count_cache: dict = {}


def count_low_rank(tables, p: int, rank_lt: int, workers: int | None = None) -> int:
    """Count y in F_p^n with rank(sum_k y_k T_k) < rank_lt over all p^n points."""
    import numpy as np

    arr = np.ascontiguousarray(tables, dtype=np.int64) % p
    key = (arr.tobytes(), arr.shape, p, rank_lt)
    if key in _count_cache:
        return _count_cache[key]
    n = arr.shape[0]
    total = p ** n
    if workers is None:
        workers = default_workers()
    if workers <= 1 or _native is None or total < (1 << 16):
        out = count_low_rank_range(arr, p, rank_lt, 0, total)
    else:
        chunks = []
        step = (total + 4 * workers - 1) // (4 * workers)
        lo = 0
        while lo < total:
            chunks.append((lo, min(lo + step, total)))
            lo += step
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(count_low_rank_range, arr, p, rank_lt, a, b)
                    for a, b in chunks]
            out = sum(f.result() for f in futs)
    _count_cache[key] = out
    return out
