import random
from fractions import Fraction
from itertools import combinations

import pytest

from commvar.chevalley import (AlgebraMismatchError, build_lie_algebra, exp_ad,
                               is_ad_nilpotent, sl2_triple_check)
from commvar.rootsystem import build_root_system


def _random_element(alg, rng, span=5):
    out = alg.zero()
    for k in range(alg.dim_m):
        out = out + alg.basis_element(k) * rng.randint(-span, span)
    return out


def test_sl2_relations(alg):
    a1 = alg("A", 1)
    e, f, h = a1.x((1,)), a1.x((-1,)), a1.h(0)
    assert a1.bracket(f, e) == h
    assert a1.bracket(h, e) == e * 2
    assert a1.bracket(h, f) == f * -2
    assert sl2_triple_check(e, -1 * f, h)


def test_structure_constant_magnitudes(alg):
    a2 = alg("A", 2)
    assert abs(a2.n((1, 1), (0, -1))) == 1
    b2 = alg("B", 2)
    assert abs(b2.n((1, 1), (0, -1))) == 2
    g2 = alg("G", 2)
    mags = {abs(v) for v in g2._n_pos.values()}
    assert 3 in mags and mags <= {1, 2, 3}


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)])
def test_magnitudes_match_root_strings(alg, label, rank):
    """|N(a,b)| = p+1 with p the length of the string b, b-a, b-2a, ..."""
    g = alg(label, rank)
    rs = g.root_system
    for a in rs.roots:
        for b in rs.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if not rs.is_root(s):
                continue
            k, cur = 0, tuple(x - y for x, y in zip(b, a))
            while rs.is_root(cur):
                k += 1
                cur = tuple(x - y for x, y in zip(cur, a))
            assert abs(g.n(a, b)) == k + 1


@pytest.mark.parametrize("label,rank", [("A", 1), ("A", 2), ("B", 2), ("G", 2),
                                        ("A", 3), ("B", 3), ("C", 3)])
def test_jacobi_exhaustive_rank_le_3(alg, label, rank):
    g = alg(label, rank)
    basis = g.basis()
    for i, j, k in combinations(range(g.dim_m), 3):
        s = g.bracket(g.bracket(basis[i], basis[j]), basis[k]) \
            + g.bracket(g.bracket(basis[j], basis[k]), basis[i]) \
            + g.bracket(g.bracket(basis[k], basis[i]), basis[j])
        assert s.is_zero(), (label, rank, i, j, k)


def test_jacobi_sampled_rank_4(alg):
    rng = random.Random(0)
    for label in ("D", "F", "A"):
        g = alg(label, 4)
        basis = g.basis()
        for _ in range(3000):
            i, j, k = (rng.randrange(g.dim_m) for _ in range(3))
            s = g.bracket(g.bracket(basis[i], basis[j]), basis[k]) \
                + g.bracket(g.bracket(basis[j], basis[k]), basis[i]) \
                + g.bracket(g.bracket(basis[k], basis[i]), basis[j])
            assert s.is_zero()


def test_bracket_antisymmetry_and_self(alg):
    rng = random.Random(1)
    g = alg("B", 2)
    for _ in range(50):
        x = _random_element(g, rng)
        y = _random_element(g, rng)
        assert g.bracket(x, x).is_zero()
        assert g.bracket(x, y) == -1 * g.bracket(y, x)


def test_bracket_rejects_mismatched_algebras(alg):
    other = build_lie_algebra(build_root_system("A", 1))
    a1 = alg("A", 1)
    with pytest.raises(AlgebraMismatchError):
        a1.bracket(a1.x((1,)), other.x((1,)))


def test_cartan_action(alg):
    g = alg("G", 2)
    rs = g.root_system
    for i in range(2):
        for b in rs.roots:
            assert g.bracket(g.h(i), g.x(b)) == g.x(b) * rs.pairing(b, i)


def test_ad_matrix_examples(alg):
    from commvar import linalg
    a1 = alg("A", 1)
    assert linalg.rank(a1.ad_matrix(a1.x((1,)))) == 2
    assert linalg.rank(a1.ad_matrix(a1.h(0))) == 2
    zero = a1.ad_matrix(a1.zero())
    assert all(all(v == 0 for v in row) for row in zero)


def test_ad_is_a_homomorphism(alg):
    from commvar import linalg
    rng = random.Random(2)
    g = alg("A", 2)
    m = g.dim_m
    for _ in range(5):
        x, y = _random_element(g, rng), _random_element(g, rng)
        ax, ay = g.ad_matrix(x), g.ad_matrix(y)
        comm = [[sum(ax[i][k] * ay[k][j] - ay[i][k] * ax[k][j] for k in range(m))
                 for j in range(m)] for i in range(m)]
        assert g.ad_matrix(g.bracket(x, y)) == comm


def test_g2_paper_triple(alg):
    g2 = alg("G", 2)
    e = g2.x((0, 1)) + g2.x((3, 1))
    f = -2 * g2.x((0, -1)) - 2 * g2.x((-3, -1))
    h = 2 * g2.coroot_element((0, 1)) + 2 * g2.coroot_element((3, 1))
    assert sl2_triple_check(e, f, h)
    rs = g2.root_system
    vals = []
    for beta in [(1, 0), (0, 1)]:
        vals.append(sum(h.coeffs.get(i, Fraction(0)) * rs.pairing(beta, i)
                        for i in range(2)))
    assert vals == [0, 2]


def test_exp_ad_exact_and_nilpotent(alg):
    g = alg("A", 2)
    n = g.x((1, 0)) + g.x((0, 1)) * 2
    assert is_ad_nilpotent(n)
    x = g.h(0)
    y = exp_ad(n, x)
    # exp(ad n) is a Lie algebra automorphism
    z = g.h(1)
    assert exp_ad(n, g.bracket(x, z)) == g.bracket(y, exp_ad(n, z))
    assert not is_ad_nilpotent(g.h(0))


def test_coroots_and_dimensions(alg):
    for label, rank, m in [("A", 2, 8), ("B", 2, 10), ("G", 2, 14), ("F", 4, 52)]:
        g = alg(label, rank)
        assert g.dim_m == m
        assert g.rank_r == rank
        for b in g.root_system.roots:
            hb = g.coroot_element(b)
            assert g.bracket(g.x(b), g.x(tuple(-t for t in b))) == -1 * hb
