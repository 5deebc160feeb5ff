"""Exact linear algebra over Q, Q(i) and prime fields, plus Smith normal form.

Matrices are plain lists of row lists with int or Fraction entries; all
arithmetic is exact.  Rational elimination clears denominators and runs
fraction-free (Bareiss) so intermediate growth stays polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

Matrix = list  # list of row lists


def _as_int_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        if all(isinstance(x, int) for x in row):
            out.append(list(row))
            continue
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def rank(rows: Matrix) -> int:
    """Exact rank via fraction-free (Bareiss) elimination."""
    if not rows or not rows[0]:
        return 0
    m = _as_int_rows(rows)
    nr, nc = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nr:
            break
    return r


def rref(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    piv_cols: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    return m, piv_cols


def kernel_basis(rows: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel {v : A v = 0}."""
    if not rows:
        return []
    nc = len(rows[0])
    m, piv_cols = rref(rows)
    free = [c for c in range(nc) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for r, pc in enumerate(piv_cols):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(rows: Matrix, rhs) -> list[Fraction] | None:
    """One solution of A x = b, or None if inconsistent."""
    if not rows:
        return None
    nc = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, piv_cols = rref(aug)
    if nc in piv_cols:
        return None
    x = [Fraction(0)] * nc
    for r, pc in enumerate(piv_cols):
        x[pc] = m[r][nc]
    return x


def rank_mod_p(rows: Matrix, p: int) -> int:
    """Rank over F_p (entries reduced mod p); p must be at least 5."""
    if p < 5:
        raise ValueError("p must be >= 5 so small structure constants stay units")
    m = [[int(x) % p for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        for i in range(r + 1, nr):
            if m[i][c]:
                f = (m[i][c] * inv) % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


def rank_gaussian(re_rows: Matrix, im_rows: Matrix) -> int:
    """Rank over Q(i) of A + iB via the realification [[A,-B],[B,A]]."""
    top = [list(a) + [-x for x in b] for a, b in zip(re_rows, im_rows)]
    bot = [list(b) + list(a) for a, b in zip(re_rows, im_rows)]
    r = rank(top + bot)
    if r % 2:
        raise AssertionError("realified rank must be even")
    return r // 2


def smith_normal_form(a: Matrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form of an integer matrix: returns (U, D, V), U A V = D.

    U and V are unimodular; D is diagonal with a divisibility chain
    d1 | d2 | ... and nonnegative entries.
    """
    d = [[int(x) for x in row] for row in a]
    nr = len(d)
    nc = len(d[0]) if d else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):      # row_i -= q*row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):      # col_i -= q*col_j
        for row in d:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        # find pivot of minimal absolute value in the trailing block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, nr):
            if d[i][t]:
                q = d[i][t] // d[t][t]
                row_op(i, t, q)
                dirty = dirty or d[i][t] != 0
        for j in range(t + 1, nc):
            if d[t][j]:
                q = d[t][j] // d[t][t]
                col_op(j, t, q)
                dirty = dirty or d[t][j] != 0
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        stray = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if d[i][j] % d[t][t] != 0:
                    stray = i
                    break
            if stray is not None:
                break
        if stray is not None:
            row_op(t, stray, -1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, d, v


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> list[list]:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def det_int(a: Matrix) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    m = [list(map(int, row)) for row in a]
    n = len(m)
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


@dataclass
class DimensionEstimate:
    """Outcome of a variety-dimension computation.

    method is one of "exhaustive-count", "generic-rank", "exhaustive-count
    (fast)" or "empty"; per_prime_counts lists (p, N_p) pairs.  When the
    slope fit does not land within 0.1 of an integer the estimate is kept
    with conclusive=False and the raw counts preserved.
    """

    dim: int | None
    method: str
    per_prime_counts: list[tuple[int, int]] = field(default_factory=list)
    notes: str = ""
    conclusive: bool = True
    empty: bool = False

    def __post_init__(self):
        if self.conclusive and not self.empty and self.dim is not None and self.dim < 0:
            raise ValueError("dimension must be nonnegative")


def ols_slope(xs: list[float], ys: list[float]) -> float:
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    var = sum((x - mx) ** 2 for x in xs)
    cov = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return cov / var


def fit_count_dimension(counts: list[tuple[int, int]], fast: bool = False) -> DimensionEstimate:
    """Dimension from point counts: OLS slope of log N_p against log p.

    Rounds half away from zero and requires the slope within 0.1 of the
    rounded integer; otherwise the estimate is inconclusive.
    """
    from math import log, floor

    if any(n == 0 for _, n in counts):
        raise ValueError("zero count: the locus should contain the origin")
    xs = [log(p) for p, _ in counts]
    ys = [log(n) for _, n in counts]
    if len(counts) < 2:
        raise ValueError("need counts at >= 2 primes for a slope")
    slope = ols_slope(xs, ys)
    nearest = floor(slope + 0.5) if slope >= 0 else -floor(-slope + 0.5)
    method = "exhaustive-count (fast)" if fast else "exhaustive-count"
    notes = f"slope={slope:.4f}"
    if fast:
        notes += "; fast: 2 primes"
    if abs(slope - nearest) < 0.1:
        return DimensionEstimate(dim=nearest, method=method,
                                 per_prime_counts=list(counts), notes=notes)
    return DimensionEstimate(dim=None, method=method, per_prime_counts=list(counts),
                             notes=notes + "; not within 0.1 of an integer",
                             conclusive=False)
