import random
from fractions import Fraction

import pytest

from commvar import linalg
from commvar.linalg import (DimensionEstimate, det_int, fit_count_dimension,
                            kernel_basis, mat_mul, rank, rank_gaussian, rank_mod_p,
                            smith_normal_form, solve)


def test_rank_identity():
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert rank(eye) == 3
    assert kernel_basis(eye) == []


def test_rank_fraction_entries():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(2, 1)]]
    assert rank(m) == 2
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
    assert rank(m) == 1
    assert rank([[1, 2], [2, 4]]) == 1


def test_rank_permutation_invariance():
    rng = random.Random(0)
    for _ in range(20):
        nr, nc = rng.randint(2, 6), rng.randint(2, 6)
        m = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        r = rank(m)
        rows = list(range(nr))
        cols = list(range(nc))
        rng.shuffle(rows)
        rng.shuffle(cols)
        perm = [[m[i][j] for j in cols] for i in rows]
        assert rank(perm) == r


def test_kernel_spans_nullspace():
    rng = random.Random(1)
    for _ in range(20):
        nr, nc = rng.randint(2, 5), rng.randint(2, 7)
        m = [[rng.randint(-5, 5) for _ in range(nc)] for _ in range(nr)]
        ker = kernel_basis(m)
        assert len(ker) == nc - rank(m)
        for v in ker:
            assert all(sum(row[j] * v[j] for j in range(nc)) == 0 for row in m)
        if ker:
            assert rank(ker) == len(ker)


def test_solve_consistency():
    m = [[1, 2], [3, 4]]
    x = solve(m, [5, 11])
    assert x == [Fraction(1), Fraction(2)]
    assert solve([[1, 1], [1, 1]], [0, 1]) is None


def test_rank_mod_p_examples():
    eye = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert rank_mod_p(eye, 7) == 4
    assert rank_mod_p([[1, 0], [0, 5]], 5) == 1
    rng = random.Random(2)
    for _ in range(10):
        m = [[rng.randint(-20, 20) for _ in range(10)] for _ in range(6)]
        r = rank(m)
        assert rank_mod_p(m, 101) == r
        assert rank_mod_p(m, 103) == r
    with pytest.raises(ValueError):
        rank_mod_p(eye, 3)


def test_rank_gaussian_realification():
    # (1+i) row pairs: rank over Q(i) is 1
    re = [[1, 1], [1, 1]]
    im = [[1, 1], [1, 1]]
    assert rank_gaussian(re, im) == 1
    # [[1, i], [-i, 1]] is singular over Q(i)
    re = [[1, 0], [0, 1]]
    im = [[0, 1], [-1, 0]]
    assert rank_gaussian(re, im) == 1
    # generic complex matrix has full rank
    re = [[1, 2], [3, 4]]
    im = [[0, 1], [1, 0]]
    assert rank_gaussian(re, im) == 2


def test_smith_frozen_examples():
    u, d, v = smith_normal_form([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == [1, 6]
    u, d, v = smith_normal_form([[0, 0], [0, 0]])
    assert d == [[0, 0], [0, 0]]
    assert u == [[1, 0], [0, 1]] and v == [[1, 0], [0, 1]]
    # the character relation lattice: both invariant factors are 1
    rel = [[1, -1, 0, -1, 1, 0], [1, 0, -1, -1, 0, 1]]
    u, d, v = smith_normal_form(rel)
    assert [d[0][0], d[1][1]] == [1, 1]


def test_smith_random_properties():
    rng = random.Random(3)
    for _ in range(30):
        nr, nc = rng.randint(1, 4), rng.randint(1, 5)
        m = [[rng.randint(-8, 8) for _ in range(nc)] for _ in range(nr)]
        u, d, v = smith_normal_form(m)
        assert mat_mul(mat_mul(u, m), v) == d
        assert abs(det_int(u)) == 1
        assert abs(det_int(v)) == 1
        diag = [d[i][i] for i in range(min(nr, nc))]
        for i in range(nr):
            for j in range(nc):
                if i != j:
                    assert d[i][j] == 0
        for a, b in zip(diag, diag[1:]):
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0
        assert all(x >= 0 for x in diag)


def test_smith_det_preserved():
    rng = random.Random(4)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        u, d, v = smith_normal_form(m)
        prod = 1
        for i in range(n):
            prod *= d[i][i]
        assert prod == abs(det_int(m))


def test_fit_count_dimension():
    est = fit_count_dimension([(5, 5), (13, 13), (17, 17)])
    assert est.dim == 1 and est.conclusive
    est = fit_count_dimension([(5, 125), (13, 2197), (17, 4913)])
    assert est.dim == 3
    # the true so5 minimal-orbit counts: slope 3.92, rounds to 4
    est = fit_count_dimension([(5, 725), (13, 30589), (17, 88145)])
    assert est.dim == 4 and est.conclusive
    # the six-subspace union counts would be inconclusive (slope 3.17)
    est = fit_count_dimension([(5, 565), (13, 11869), (17, 27217)])
    assert not est.conclusive and est.dim is None
    assert "not within 0.1" in est.notes
    with pytest.raises(ValueError):
        fit_count_dimension([(5, 0), (13, 0), (17, 0)])


def test_dimension_estimate_guard():
    with pytest.raises(ValueError):
        DimensionEstimate(dim=-1, method="exhaustive-count")
