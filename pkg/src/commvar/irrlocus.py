"""Dimension and codimension of the irregular set inside a centralizer.

I(a_x) = {y in a_x : dim (a_x)_y > rk a}.  Two routes: exhaustive F_p
point counts at p in {5, 13, 17} with a log-log slope fit, and exact-rank
certification of claimed linear components at random rational points.
Primes are 1 mod 4 so that sqrt(-1) exists in F_p and Galois-conjugate
component pairs contribute full counts; p >= 5 keeps every structure
constant a unit.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from . import kernels, linalg
from .chevalley import LieAlgebra, LieElement
from .centralizers import Subspace, centralizer
from .linalg import DimensionEstimate

PRIMES = (5, 13, 17)
PRIMES_FAST = (5, 13)


class BudgetError(ValueError):
    """Enumeration request outside the point-count budget."""


def integral_basis(sub: Subspace) -> list[LieElement]:
    """Rescale each basis vector to primitive integer coordinates."""
    out = []
    for v in sub.basis:
        ivec = v.to_int_vector()
        g = 0
        for x in ivec:
            g = gcd(g, abs(x))
        out.append(LieElement(v.alg, {k: Fraction(x, g) for k, x in enumerate(ivec) if x}))
    return out


def bracket_tables(sub: Subspace):
    """Integer tables T[k][:, j] = [w_k, w_j] in ambient coordinates."""
    import numpy as np

    alg = sub.alg
    basis = integral_basis(sub)
    n = len(basis)
    tables = np.zeros((n, alg.dim_m, n), dtype=np.int64)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            vec = alg.bracket(bi, bj).to_vector()
            for t, val in enumerate(vec):
                if val.denominator != 1:
                    raise ArithmeticError("bracket of integral elements must be integral")
                tables[i, t, j] = int(val)
    return tables, basis


def _check_reduction(basis: list[LieElement], p: int):
    rows = [b.to_int_vector() for b in basis]
    if linalg.rank_mod_p(rows, p) != len(basis):
        raise ArithmeticError(f"basis degenerates mod {p}; bad reduction")


def exact_point_count(a: LieAlgebra, x: LieElement, p: int, *,
                      subspace: Subspace | None = None,
                      workers: int | None = None) -> int:
    """Exact N_p = #{y in a_x tensor F_p : dim (a_x)_y > rk a} by full enumeration.

    Budget: dim a_x <= 6 for p in {5, 13, 17}; dim 7 only at p = 5;
    larger centralizers are rejected.
    """
    if p not in PRIMES:
        raise BudgetError(f"p must be one of {PRIMES}")
    sub = subspace if subspace is not None else centralizer(a, x)
    n = sub.dim
    if n > 7 or (n == 7 and p != 5):
        raise BudgetError(f"dim a_x = {n} at p = {p} exceeds the enumeration budget "
                          "(dim <= 6 for p in {5,13,17}, dim 7 only at p = 5)")
    tables, basis = bracket_tables(sub)
    _check_reduction(basis, p)
    rank_lt = n - a.rank_r
    if rank_lt <= 0:
        return 0
    return kernels.count_low_rank(tables, p, rank_lt, workers=workers)


def generic_centralizer_dim(a: LieAlgebra, x: LieElement, samples: int = 20,
                            seed: int = 0) -> int:
    """Minimum of dim (a_x)_y over random small-integer points y of a_x."""
    sub = centralizer(a, x)
    rng = random.Random(seed)
    best = sub.dim
    for _ in range(max(samples, 20)):
        coords = [rng.randint(-5, 5) for _ in range(sub.dim)]
        y = sub.element_from_coords(coords)
        cols = [a.bracket(y, w).to_vector() for w in sub.basis]
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(a.dim_m)]
        best = min(best, sub.dim - linalg.rank(rows))
    return best


def irregular_locus_dim(a: LieAlgebra, x: LieElement, method: str = "exhaustive-count",
                        *, component: Subspace | None = None, fast: bool = False,
                        workers: int | None = None, seed: int = 0) -> DimensionEstimate:
    """DimensionEstimate for I(a_x); empty marker when x is regular in a."""
    sub = centralizer(a, x)
    if sub.dim == a.rank_r:
        return DimensionEstimate(dim=None, method="empty", empty=True,
                                 notes="x is regular; the irregular set is empty")
    if method == "generic-rank":
        if component is None:
            raise ValueError("generic-rank needs a claimed linear component")
        if not verify_linear_component(a, x, component.basis, seed=seed):
            raise ValueError("claimed component is not contained in the locus")
        return DimensionEstimate(dim=component.dim, method="generic-rank",
                                 notes="claimed linear component certified at "
                                       "random rational points")
    if method != "exhaustive-count":
        raise ValueError(f"unknown method {method!r}")
    primes = PRIMES_FAST if fast else PRIMES
    if sub.dim == 7 and not fast:
        raise BudgetError("dim 7 allows enumeration only at p = 5; no slope fit")
    counts = [(p, exact_point_count(a, x, p, subspace=sub, workers=workers))
              for p in primes]
    return linalg.fit_count_dimension(counts, fast=fast)


def irregular_locus_codim(a: LieAlgebra, x: LieElement, **kw) -> int:
    est = irregular_locus_dim(a, x, **kw)
    if est.empty:
        raise ValueError("x is regular; codim undefined (empty locus)")
    if not est.conclusive:
        raise ValueError(f"inconclusive estimate: {est.notes}; counts {est.per_prime_counts}")
    sub_dim = centralizer(a, x).dim
    return sub_dim - est.dim


ComplexSpanVector = tuple[LieElement, LieElement]


def verify_linear_component(a: LieAlgebra, x: LieElement, span,
                            samples: int = 50, seed: int = 0) -> bool:
    """Check that 50 random rational points of a subspace are irregular in a_x.

    Span vectors are LieElements, or (real, imaginary) pairs for subspaces
    defined over Q(i); complex ranks go through the realification.
    """
    sub = centralizer(a, x)
    rng = random.Random(seed)
    pairs: list[ComplexSpanVector] = []
    for v in span:
        if isinstance(v, tuple):
            pairs.append(v)
        else:
            pairs.append((v, a.zero()))
    is_complex = any(not im.is_zero() for _, im in pairs)
    for re, im in pairs:
        if not sub.contains(re) or (not im.is_zero() and not sub.contains(im)):
            raise ValueError("span vector outside the centralizer")
    threshold = a.rank_r
    for _ in range(samples):
        yre, yim = a.zero(), a.zero()
        for re, im in pairs:
            tr = rng.randint(-5, 5)
            ti = rng.randint(-5, 5) if is_complex else 0
            # (tr + i ti) * (re + i im)
            yre = yre + re * tr - im * ti
            yim = yim + im * tr + re * ti
        mre = [[Fraction(0)] * sub.dim for _ in range(a.dim_m)]
        mim = [[Fraction(0)] * sub.dim for _ in range(a.dim_m)]
        for j, w in enumerate(sub.basis):
            vre = a.bracket(yre, w).to_vector()
            vim = a.bracket(yim, w).to_vector()
            for t in range(a.dim_m):
                mre[t][j] = vre[t]
                mim[t][j] = vim[t]
        if is_complex:
            rk = linalg.rank_gaussian(mre, mim)
        else:
            rk = linalg.rank(mre)
        if sub.dim - rk <= threshold:
            return False
    return True
