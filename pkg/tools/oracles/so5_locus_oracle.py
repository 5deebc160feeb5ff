"""Independent brute-force oracle for the so5 centralizer loci.

Works directly with 5x5 matrices (skew with respect to the antidiagonal
form), so it shares no code with the package's root-system or structure
constant machinery.  Used once, before the main build, to freeze the
point counts asserted in the test suite.

Run:  python tools/oracles/so5_locus_oracle.py
"""

from fractions import Fraction
from itertools import product

import numpy as np

N = 5


def E(i, j):
    m = [[0] * N for _ in range(N)]
    m[i][j] = 1
    return m


def madd(a, b, s=1):
    return [[a[i][j] + s * b[i][j] for j in range(N)] for i in range(N)]


def mmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(N)) for j in range(N)] for i in range(N)]


def bracket(a, b):
    return madd(mmul(a, b), mmul(b, a), -1)


def F(i, j):
    # E_ij - E_{6-j,6-i} with 1-based indices; so5 for the antidiagonal form.
    return madd(E(i - 1, j - 1), E(4 - (j - 1), 4 - (i - 1)), -1)


# Basis of so5, ordered: the two diagonal generators, then root vectors.
D1 = madd(E(0, 0), E(4, 4), -1)
D2 = madd(E(1, 1), E(3, 3), -1)
ROOT_VECS = {
    "a1": F(1, 2),        # alpha1 = eps1-eps2 (long)
    "a2": F(2, 3),        # alpha2 = eps2 (short)
    "a1+a2": F(1, 3),     # eps1
    "a1+2a2": F(1, 4),    # eps1+eps2
    "-a1": F(2, 1),
    "-a2": F(3, 2),
    "-a1-a2": F(3, 1),
    "-a1-2a2": F(4, 1),
}
BASIS = [D1, D2] + list(ROOT_VECS.values())


def flatten(m):
    return [m[i][j] for i in range(N) for j in range(N)]


def rank_frac(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    nr, nc = len(rows), len(rows[0])
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        for r in range(nr):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / pv
                rows[r] = [rows[r][k] - f * rows[rank][k] for k in range(nc)]
        rank += 1
        if rank == min(nr, nc):
            break
    return rank


def kernel_frac(rows):
    """Kernel basis of the matrix given by rows (acting on column vectors)."""
    nr, nc = len(rows), len(rows[0])
    rows = [[Fraction(x) for x in r] for r in rows]
    piv_cols = []
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(nr):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [rows[r][k] - f * rows[rank][k] for k in range(nc)]
        piv_cols.append(c)
        rank += 1
    free = [c for c in range(nc) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for r, pc in enumerate(piv_cols):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def centralizer_basis(x):
    # columns indexed by so5 basis, rows by gl5 coordinates
    cols = [flatten(bracket(b, x)) for b in BASIS]
    rows = [[cols[j][i] for j in range(len(BASIS))] for i in range(N * N)]
    ker = kernel_frac(rows)
    out = []
    for v in ker:
        from math import lcm
        den = lcm(*[c.denominator for c in v]) if v else 1
        v = [int(c * den) for c in v]
        m = [[0] * N for _ in range(N)]
        for coef, b in zip(v, BASIS):
            if coef:
                m = madd(m, [[coef * e for e in row] for row in b])
        out.append(m)
    return out


def count_pure(ax, p, rank_lt):
    """#[y in span_Fp(ax) with rank over F_p of [y,-]|_ax < rank_lt], pure python."""
    n = len(ax)
    tables = []
    for bi in ax:
        tables.append([flatten(bracket(bi, bj)) for bj in ax])  # row k: [b_i, b_j]
    count = 0
    for point in product(range(p), repeat=n):
        rows = []
        for j in range(n):
            col = [sum(point[i] * tables[i][j][t] for i in range(n)) % p for t in range(N * N)]
            rows.append(col)
        if rank_fp(rows, p) < rank_lt:
            count += 1
    return count


def rank_fp(rows, p):
    rows = [r[:] for r in rows]
    nr, nc = len(rows), len(rows[0])
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if rows[r][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        for r in range(rank + 1, nr):
            if rows[r][c] % p:
                f = (rows[r][c] * inv) % p
                rows[r] = [(rows[r][k] - f * rows[rank][k]) % p for k in range(nc)]
        rank += 1
    return rank


def count_numpy(ax, p, rank_lt, batch=1 << 14):
    """Same count, vectorized with a batched Gaussian elimination."""
    n = len(ax)
    dim_amb = N * N
    T = np.zeros((n, dim_amb, n), dtype=np.int64)
    for i, bi in enumerate(ax):
        for j, bj in enumerate(ax):
            T[i, :, j] = [int(v) % p for v in flatten(bracket(bi, bj))]
    total = p ** n
    count = 0
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    for start in range(0, total, batch):
        idx = np.arange(start, min(start + batch, total), dtype=np.int64)
        digits = np.empty((len(idx), n), dtype=np.int64)
        rem = idx.copy()
        for k in range(n):
            digits[:, k] = rem % p
            rem //= p
        M = np.tensordot(digits, T, axes=([1], [0])) % p  # (B, dim_amb, n)
        ranks = batched_rank_fp(M, p, inv)
        count += int((ranks < rank_lt).sum())
    return count


def batched_rank_fp(M, p, inv):
    B, nr, nc = M.shape
    M = M.copy()
    rank = np.zeros(B, dtype=np.int64)
    for c in range(nc):
        sub = M[:, :, c].copy()
        row_idx = np.arange(nr)[None, :]
        live = row_idx >= rank[:, None]
        nz = (sub != 0) & live
        has = nz.any(axis=1)
        piv = np.where(has, nz.argmax(axis=1), 0)
        bsel = np.arange(B)
        # swap pivot row into position `rank`
        r0 = rank.copy()
        prow = M[bsel, piv, :].copy()
        M[bsel, piv, :] = np.where(has[:, None], M[bsel, r0, :], M[bsel, piv, :])
        M[bsel, r0, :] = np.where(has[:, None], prow, M[bsel, r0, :])
        pv = M[bsel, r0, c]
        pinv = inv[pv] * has
        # eliminate below
        below = row_idx > r0[:, None]
        factors = (M[:, :, c] * pinv[:, None]) % p
        factors = np.where(below & has[:, None], factors, 0)
        M = (M - factors[:, :, None] * M[bsel, r0, :][:, None, :]) % p
        rank += has
    return rank


def locus_points(ax, p, rank_lt):
    n = len(ax)
    tables = []
    for bi in ax:
        tables.append([flatten(bracket(bi, bj)) for bj in ax])
    pts = []
    for point in product(range(p), repeat=n):
        rows = []
        for j in range(n):
            col = [sum(point[i] * tables[i][j][t] for i in range(n)) % p for t in range(N * N)]
            rows.append(col)
        if rank_fp(rows, p) < rank_lt:
            pts.append(point)
    return pts


def main():
    x_min = ROOT_VECS["a1"]      # long root vector, 4-dim orbit
    x_sub = ROOT_VECS["a2"]      # short root vector, subregular

    ax_min = centralizer_basis(x_min)
    ax_sub = centralizer_basis(x_sub)
    print("dim centralizer(X_a1)  =", len(ax_min))
    print("dim centralizer(X_a2)  =", len(ax_sub))

    # express a_x(min) in a root-vector-adapted basis for readable coordinates
    adapted = [ROOT_VECS["a1"], ROOT_VECS["a1+a2"], ROOT_VECS["a1+2a2"],
               ROOT_VECS["-a2"], ROOT_VECS["-a1-2a2"], madd(D1, D2)]
    for b in adapted:
        assert bracket(b, x_min) == [[0] * N for _ in range(N)], "adapted basis must centralize"
    # rank threshold: irregular iff dim(a_x)_y > rk = 2 iff rank < dim(a_x) - 2
    for p in (5,):
        n_min = count_pure(adapted, p, len(adapted) - 2)
        n_sub = count_pure(ax_sub, p, len(ax_sub) - 2)
        print(f"p={p}: N(min-orbit) = {n_min}   N(subreg) = {n_sub}")

    pts = locus_points(adapted, 5, 4)
    print("locus size at p=5:", len(pts))
    # classify: coordinate-subspace membership (u indices of the adapted basis)
    # V1={u2=u5=u6=0} V2={u4=u5=u6=0} V3={u3=u5=u6=0} V4={u2=u3=u6=0}
    def inV(pt, zero_idx):
        return all(pt[i] == 0 for i in zero_idx)

    V = {
        "V1": (1, 4, 5),
        "V2": (3, 4, 5),
        "V3": (2, 4, 5),
        "V4": (1, 2, 5),
    }
    rest = []
    for pt in pts:
        if not any(inV(pt, z) for z in V.values()):
            rest.append(pt)
    print("points outside V1..V4:", len(rest))
    ratios = set()
    others = []
    for pt in rest:
        # candidate Galois pair: u5=u6=0, u2 = lambda*u4
        if pt[4] == 0 and pt[5] == 0 and pt[3] != 0:
            lam = (pt[1] * pow(pt[3], 3, 5)) % 5
            ratios.add(lam)
        else:
            others.append(pt)
    print("ratio values u2/u4 on remainder:", sorted(ratios), " (i mod 5 = 2,3)")
    print("remainder points not of that shape:", len(others))
    if others:
        for q in others[:20]:
            print("   stray:", q)

    for p in (5, 13, 17):
        n_min = count_numpy(adapted, p, 4)
        print(f"numpy count p={p}: N(min-orbit) = {n_min}   poly 6p^3-8p^2+3p = {6*p**3-8*p**2+3*p}")
    for p in (13,):
        n_sub = count_numpy(ax_sub, p, 2)
        print(f"numpy count p={p}: N(subreg) = {n_sub}   p^3 = {p**3}")


if __name__ == "__main__":
    main()
