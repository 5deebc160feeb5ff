"""Brute-force oracles for the rank-2 centralizer loci other than so5-minimal.

Independent matrix realizations (sl3 as traceless 3x3, sl2+sl2 as block
pairs); also checks the shape of the so5 subregular locus and computes
the inclusion-exclusion count of the six 3-dim subspaces over F_p.

Run:  python tools/oracles/small_cases_oracle.py
"""

from fractions import Fraction
from itertools import product, combinations

from so5_locus_oracle import (ROOT_VECS, D1, D2, madd, bracket as so5_bracket,
                              flatten as so5_flatten, rank_fp, kernel_frac)


def matvec_tables(basis, bra, flat):
    return [[flat(bra(bi, bj)) for bj in basis] for bi in basis]


def count_locus(basis, bra, flat, p, rank_lt, collect=False):
    n = len(basis)
    tables = matvec_tables(basis, bra, flat)
    dim_amb = len(tables[0][0])
    cnt = 0
    pts = []
    for point in product(range(p), repeat=n):
        rows = [[sum(point[i] * tables[i][j][t] for i in range(n)) % p
                 for t in range(dim_amb)] for j in range(n)]
        if rank_fp(rows, p) < rank_lt:
            cnt += 1
            if collect:
                pts.append(point)
    return (cnt, pts) if collect else cnt


# --- sl3: x = E12, a_x = <E12, E13, E32, diag(1,1,-2)> ----------------------

def E3(i, j):
    m = [[0] * 3 for _ in range(3)]
    m[i][j] = 1
    return m


def bracket3(a, b):
    ab = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    return [[ab[i][j] - ba[i][j] for j in range(3)] for i in range(3)]


def flat3(m):
    return [m[i][j] for i in range(3) for j in range(3)]


def sl3_case():
    x = E3(0, 1)
    ax = [E3(0, 1), E3(0, 2), E3(2, 1),
          [[1, 0, 0], [0, 1, 0], [0, 0, -2]]]
    for b in ax:
        assert bracket3(b, x) == [[0] * 3] * 3
    out = {}
    for p in (5, 13, 17):
        out[p] = count_locus(ax, bracket3, flat3, p, len(ax) - 2)
    return out


# --- sl2 + sl2: x = (e, 0) --------------------------------------------------

def bracket22(a, b):
    return (bracket2(a[0], b[0]), bracket2(a[1], b[1]))


def bracket2(a, b):
    ab = [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return [[ab[i][j] - ba[i][j] for j in range(2)] for i in range(2)]


def flat22(m):
    return [m[0][i][j] for i in range(2) for j in range(2)] + \
           [m[1][i][j] for i in range(2) for j in range(2)]


def sl2sl2_case():
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    h = [[1, 0], [0, -1]]
    z = [[0, 0], [0, 0]]
    x = (e, z)
    ax = [(e, z), (z, e), (z, f), (z, h)]
    for b in ax:
        assert bracket22(b, x) == (bracket2(z, z), bracket2(z, z))
    out = {}
    for p in (5, 13, 17):
        out[p] = count_locus(ax, bracket22, flat22, p, len(ax) - 2)
    return out


# --- so5 subregular: locus should be the span {d = 0} ------------------------

def so5_subreg_case():
    x = ROOT_VECS["a2"]
    # adapted basis: X_a2, X_{a1+2a2}, X_{-a1}, H_{a1+a2} (= D1)
    ax = [ROOT_VECS["a2"], ROOT_VECS["a1+2a2"], ROOT_VECS["-a1"], D1]
    for b in ax:
        assert so5_bracket(b, x) == [[0] * 5 for _ in range(5)]
    cnt, pts = count_locus(ax, so5_bracket, so5_flatten, 5, 2, collect=True)
    all_d0 = all(pt[3] == 0 for pt in pts)
    return cnt, all_d0


# --- inclusion-exclusion over the six printed subspaces ----------------------

def six_span_ie_count(p):
    """|union of the six printed 3-dim subspaces| over F_p, p = 1 mod 4.

    Subspaces in a_x coordinates (a,b,c,d,e,f); i = sqrt(-1) in F_p.
    Each is encoded by its annihilator rows.
    """
    i = next(t for t in range(2, p) if (t * t + 1) % p == 0)
    e = [[1 if k == j else 0 for k in range(6)] for j in range(6)]
    ann = {
        1: [e[1], e[4], e[5]],                       # <e1,e3,e4>
        2: [e[3], e[4], e[5]],                       # <e1,e2,e3>
        3: [e[2], e[4], e[5]],                       # <e1,e2,e4>
        4: [e[1], e[2], e[5]],                       # <e1,e4,e5>
        5: [[0, 1, 0, (-i) % p, 0, 0], e[4], e[5]],  # <e1, e4+i*e2, e3>
        6: [[0, 1, 0, i % p, 0, 0], e[4], e[5]],     # <e1, e4-i*e2, e3>
    }
    total = 0
    for k in range(1, 7):
        for sub in combinations(range(1, 7), k):
            rows = [r for s in sub for r in ann[s]]
            d = 6 - rank_fp([r[:] for r in rows], p)
            total += (-1) ** (k + 1) * p ** d
    return total


def main():
    print("sl3 counts (expect p):", sl3_case())
    print("sl2+sl2 counts (expect p):", sl2sl2_case())
    cnt, d0 = so5_subreg_case()
    print(f"so5 subreg count p=5 (expect 125): {cnt}; locus == span{{d=0}}: {d0}")
    for p in (5, 13, 17):
        print(f"six-span inclusion-exclusion count p={p}: {six_span_ie_count(p)}"
              f"   poly 6p^3-8p^2+3p = {6*p**3 - 8*p**2 + 3*p}")


if __name__ == "__main__":
    main()
