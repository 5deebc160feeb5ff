"""Symbolic cross-check of the so5 minimal-orbit centralizer locus.

Computes, with sympy over QQ, the rank conditions for ad y restricted to
the 6-dimensional centralizer, and probes the component structure found
by the mod-p oracle.
"""

import sympy as sp
from so5_locus_oracle import (BASIS, D1, D2, ROOT_VECS, bracket, flatten, madd, N)


def main():
    x = ROOT_VECS["a1"]
    adapted = [ROOT_VECS["a1"], ROOT_VECS["a1+a2"], ROOT_VECS["a1+2a2"],
               ROOT_VECS["-a2"], ROOT_VECS["-a1-2a2"], madd(D1, D2)]
    a, b, c, d, e, f = sp.symbols("a b c d e f")
    coeffs = [a, b, c, d, e, f]

    # M: columns are [y, B_j] flattened into gl5 coordinates
    cols = []
    for j, bj in enumerate(adapted):
        col = [sp.Integer(0)] * (N * N)
        for i, bi in enumerate(adapted):
            fb = flatten(bracket(bi, bj))
            for t in range(N * N):
                if fb[t]:
                    col[t] += coeffs[i] * fb[t]
        cols.append(col)
    M = sp.Matrix([[cols[j][t] for j in range(6)] for t in range(N * N)])
    M = sp.Matrix([row for row in M.tolist() if any(x != 0 for x in row)])
    print("compressed M shape:", M.shape)
    print(M)

    # generic rank
    print("generic rank:", M.rank())

    # rank at a characteristic-zero point of the quadric f^2 + ce = 0
    subs1 = {a: 0, b: 0, c: 1, d: 0, e: -4, f: 2}
    print("rank at (0,0,1,0,-4,2):", M.subs(subs1).rank())
    subs2 = {a: 0, b: 1, c: 1, d: 1, e: -1, f: 1}
    print("rank at (0,1,1,1,-1,1):", M.subs(subs2).rank())
    subs3 = {a: 0, b: 2, c: 3, d: 5, e: -7, f: sp.sqrt(21)}
    print("rank at quadric pt w/ sqrt:", sp.simplify(M.subs(subs3)).rank())

    # 4x4 minors: gcd/factored structure
    minors = set()
    rows = list(range(M.shape[0]))
    import itertools
    for rsel in itertools.combinations(rows, 4):
        for csel in itertools.combinations(range(6), 4):
            det = M[rsel, csel].det()
            if det != 0:
                minors.add(sp.factor(det))
    print("number of nonzero 4x4 minors:", len(minors))
    g = sp.gcd(list(minors))
    print("gcd of minors:", sp.factor(g))
    quotient_ideal = sorted({sp.factor(sp.cancel(m / g)) for m in minors}, key=sp.count_ops)
    print("minors / gcd (sorted, first 12):")
    for q in quotient_ideal[:12]:
        print("   ", q)

    # Groebner basis of the 4x4 minor ideal
    G = sp.groebner(list(minors), b, c, d, e, f, order="lex")
    print("groebner basis of minor ideal:")
    for poly in G.exprs:
        print("   ", sp.factor(poly))


if __name__ == "__main__":
    main()
