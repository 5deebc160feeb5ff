# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Hot loop for exhaustive mod-p point counts.

Enumerates y in F_p^n (an index range, base-p digits), forms the matrix
M(y) = sum_k y_k T_k incrementally along the odometer, and counts the
points where rank_{F_p} M(y) < rank_lt.  Elimination exits early once the
rank reaches the threshold, which is the common case.
"""


def count_low_rank_range(long long[:, :, ::1] tables, long long p,
                         long long rank_lt, long long start, long long stop):
    """Count indices in [start, stop) whose point has rank below rank_lt."""
    cdef long long n = tables.shape[0]
    cdef long long m = tables.shape[1]
    if tables.shape[2] != n:
        raise ValueError("tables must have shape (n, m, n)")
    if n > 10 or m > 64 or p < 2 or p >= 1024:
        raise ValueError("kernel caps: n <= 10, m <= 64, p < 1024")
    if start < 0 or stop < start:
        raise ValueError("bad index range")

    cdef long long M[64][10]
    cdef long long W[64][10]
    cdef long long digits[10]
    cdef long long inv[1024]
    cdef long long i, j, k, c, r, piv, f, idx, carry, count, t, val, p2

    for i in range(1, p):
        inv[i] = 1
        # Fermat inverse by square-and-multiply on exponent p-2
        t = p - 2
        val = i
        while t:
            if t & 1:
                inv[i] = (inv[i] * val) % p
            val = (val * val) % p
            t >>= 1

    # decode start into digits and build M
    idx = start
    for k in range(n):
        digits[k] = idx % p
        idx //= p
    for i in range(m):
        for j in range(n):
            M[i][j] = 0
    for k in range(n):
        if digits[k]:
            for i in range(m):
                for j in range(n):
                    M[i][j] = (M[i][j] + digits[k] * tables[k, i, j]) % p

    count = 0
    p2 = p * p
    with nogil:
        idx = start
        while idx < stop:
            # rank of M with early exit at rank_lt
            for i in range(m):
                for j in range(n):
                    W[i][j] = M[i][j]
            r = 0
            for c in range(n):
                piv = -1
                for i in range(r, m):
                    if W[i][c] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != r:
                    for j in range(c, n):
                        t = W[r][j]
                        W[r][j] = W[piv][j]
                        W[piv][j] = t
                val = inv[W[r][c]]
                for i in range(r + 1, m):
                    if W[i][c] != 0:
                        f = (W[i][c] * val) % p
                        for j in range(c, n):
                            W[i][j] = (W[i][j] + p2 - f * W[r][j]) % p
                r += 1
                if r >= rank_lt:
                    break
            if r < rank_lt:
                count += 1

            idx += 1
            if idx >= stop:
                break
            # odometer step; each touched digit contributes +T_k mod p
            carry = 1
            k = 0
            while carry and k < n:
                digits[k] += 1
                for i in range(m):
                    for j in range(n):
                        M[i][j] = (M[i][j] + tables[k, i, j]) % p
                if digits[k] == p:
                    digits[k] = 0
                    k += 1
                else:
                    carry = 0
    return count
