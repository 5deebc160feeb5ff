import random

import pytest

from commvar import linalg
from commvar.centralizers import (Subspace, cartan_subspace, centralizer,
                                  centralizer_dim, full_space, is_irregular,
                                  kernel_of_root, mu_rank_identity, orbit_closure_dim)
from commvar.chevalley import exp_ad


def _random_element(alg, rng, span=5):
    out = alg.zero()
    for k in range(alg.dim_m):
        out = out + alg.basis_element(k) * rng.randint(-span, span)
    return out


def test_sl3_subregular_centralizer(alg):
    a2 = alg("A", 2)
    c = centralizer(a2, a2.x((1, 0)))
    assert c.dim == 4
    expected = Subspace(a2, [a2.x((1, 0)), a2.x((1, 1)), a2.x((0, -1)),
                             a2.h(0) + 2 * a2.h(1)])
    assert c.same_span(expected)


def test_so5_centralizers(alg):
    b2 = alg("B", 2)
    assert centralizer_dim(b2, b2.x((0, 1))) == 4
    assert centralizer_dim(b2, b2.x((1, 0))) == 6
    c = centralizer(b2, b2.x((0, 1)))
    assert c.same_span(Subspace(b2, [b2.x((0, 1)), b2.x((1, 2)), b2.x((-1, 0)),
                                     b2.coroot_element((1, 1))]))
    c = centralizer(b2, b2.x((1, 0)))
    assert c.same_span(Subspace(b2, [b2.x((1, 0)), b2.x((1, 1)), b2.x((1, 2)),
                                     b2.x((0, -1)), b2.x((-1, -2)),
                                     b2.coroot_element((1, 2))]))


def test_g2_subregular_centralizer(alg):
    g2 = alg("G", 2)
    e = g2.x((0, 1)) + g2.x((3, 1))
    c = centralizer(g2, e)
    assert c.dim == 4
    assert c.same_span(Subspace(g2, [e, g2.x((1, 1)), g2.x((3, 2)), g2.x((2, 1))]))
    line = Subspace(g2, [g2.x((3, 2))])
    for y in c.basis:
        for w in c.basis:
            assert line.contains(g2.bracket(y, w))


def test_is_irregular_examples(alg):
    a1 = alg("A", 1)
    assert not is_irregular(a1, a1.x((1,)))
    assert is_irregular(a1, a1.zero())
    a2 = alg("A", 2)
    assert is_irregular(a2, a2.x((1, 0)))
    assert is_irregular(a2, a2.zero())


def test_centralizer_of_semisimple_matches_vanishing_roots(alg):
    g = alg("B", 2)
    rs = g.root_system
    z = g.h(0) * 2 + g.h(1) * 3
    expected = [g.h(0), g.h(1)]
    for b in rs.roots:
        from fractions import Fraction
        val = sum(z.coeffs.get(i, Fraction(0)) * rs.pairing(b, i) for i in range(2))
        if val == 0:
            expected.append(g.x(b))
    assert centralizer(g, z).same_span(Subspace(g, expected))


def test_mu_rank_identity_examples(alg, sl2sl2):
    a2 = alg("A", 2)
    r, j = mu_rank_identity(a2.zero(), a2.zero())
    assert (r, j) == (0, a2.dim_m)
    a1 = alg("A", 1)
    r, j = mu_rank_identity(a1.x((1,)), a1.zero())
    assert (r, j) == (2, 1)


def test_mu_rank_on_moved_cartan_pairs(alg):
    a2 = alg("A", 2)
    rng = random.Random(0)
    for _ in range(5):
        t1 = a2.h(0) * rng.randint(1, 4) + a2.h(1) * rng.randint(5, 9)
        t2 = a2.h(0) * rng.randint(1, 4) + a2.h(1) * rng.randint(5, 9)
        n = a2.x((1, 0)) * rng.randint(-2, 2) + a2.x((0, 1)) * rng.randint(-2, 2) \
            + a2.x((1, 1)) * rng.randint(-2, 2)
        x, y = exp_ad(n, t1), exp_ad(n, t2)
        assert a2.bracket(x, y).is_zero()
        r, j = mu_rank_identity(x, y)
        assert (r, j) == (6, 2)


@pytest.mark.parametrize("label,rank,samples", [
    ("A", 1, 500), ("A", 2, 400), ("B", 2, 300), ("G", 2, 200),
    ("A", 3, 150), ("B", 3, 100), ("C", 3, 100),
])
def test_centralizer_dim_at_least_rank(alg, label, rank, samples):
    g = alg(label, rank)
    rng = random.Random(42)
    for _ in range(samples):
        z = _random_element(g, rng)
        assert centralizer_dim(g, z) >= g.rank_r


def test_centralizer_dim_exp_invariant(alg):
    g = alg("B", 2)
    rng = random.Random(7)
    for _ in range(10):
        z = _random_element(g, rng, span=3)
        n = g.x((1, 1)) * rng.randint(-2, 2) + g.x((0, 1)) * rng.randint(-2, 2)
        moved = exp_ad(n, z)
        assert centralizer_dim(g, moved) == centralizer_dim(g, z)
        assert is_irregular(g, moved) == is_irregular(g, z)


def test_orbit_closure_dims(alg):
    a2 = alg("A", 2)
    assert orbit_closure_dim(cartan_subspace(a2)) == a2.dim_m
    for label, rank in [("A", 2), ("B", 2), ("G", 2), ("A", 3)]:
        g = alg(label, rank)
        for i in range(rank):
            alpha = tuple(1 if j == i else 0 for j in range(rank))
            assert orbit_closure_dim(kernel_of_root(g, alpha)) == g.dim_m - 3


def test_orbit_closure_connected_pair_a3(alg):
    g = alg("A", 3)
    rs = g.root_system
    rows = [[rs.pairing(tuple(1 if j == i else 0 for j in range(3)), k) for k in range(3)]
            for i in (0, 1)]
    ker = linalg.kernel_basis(rows)
    c = Subspace(g, [g.cartan_element(v) for v in ker])
    # r - 2 + (number of roots outside the A2 subsystem on {a1, a2})
    assert orbit_closure_dim(c) == (3 - 2) + (12 - 6)


def test_orbit_closure_rejects_non_cartan(alg):
    g = alg("A", 2)
    with pytest.raises(ValueError):
        orbit_closure_dim(Subspace(g, [g.x((1, 0))]))


def test_nested_centralizer_paths_agree(alg):
    # (g_x)_y = (g_y)_x as subspaces
    g = alg("B", 2)
    x = g.x((0, 1))
    y = g.x((1, 2)) + g.coroot_element((1, 1))
    gx_y = centralizer(centralizer(g, x), y)
    gy_x = centralizer(centralizer(g, y), x)
    assert gx_y.same_span(gy_x)


def test_subspace_dependent_basis_rejected(alg):
    g = alg("A", 1)
    with pytest.raises(ValueError):
        Subspace(g, [g.x((1,)), g.x((1,)) * 2])
