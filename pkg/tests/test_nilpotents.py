import pytest

from commvar.centralizers import centralizer, centralizer_dim
from commvar.chevalley import exp_ad, is_ad_nilpotent
from commvar.nilpotents import (NilpotentRep, Partition, UnsupportedLeviError,
                                aaa_h_element, direct_sum_reps, factor_reps,
                                lemma_aaa_h, partitions, type_a_rep)
from commvar.rootsystem import subsystem


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 2, 2)).n == 7


def test_partitions_enumeration():
    assert len(partitions(2)) == 2
    assert len(partitions(3)) == 3
    assert len(partitions(4)) == 5
    assert len(partitions(6)) == 11


@pytest.mark.parametrize("n,parts,expected_dim", [
    (2, (2,), 1),
    (3, (2, 1), 4),
    (3, (3,), 2),
    (4, (2, 2), 7),
    (4, (2, 1, 1), 9),
    (4, (3, 1), 5),
])
def test_type_a_centralizer_dims(alg, n, parts, expected_dim):
    """dim of the centralizer inside sl_n is sum (2i-1) d_i minus 1."""
    g = alg("A", n - 1)
    x = type_a_rep(g, tuple(range(n - 1)), parts)
    assert centralizer_dim(g, x) == expected_dim
    assert expected_dim == Partition(parts).centralizer_dim_gl() - 1
    assert is_ad_nilpotent(x)


def test_type_a_rep_examples(alg):
    a1 = alg("A", 1)
    assert type_a_rep(a1, (0,), (2,)) == a1.x((1,))
    a2 = alg("A", 2)
    assert type_a_rep(a2, (0, 1), (2, 1)) == a2.x((1, 0))
    with pytest.raises(ValueError):
        type_a_rep(a2, (0, 1), (2, 2))


def test_b2_reps(alg):
    b2 = alg("B", 2)
    reps, complete = factor_reps(b2, "B", 2, (0, 1))
    assert complete
    dims = {lbl: centralizer_dim(b2, el) for lbl, el in reps}
    assert dims == {"0": 10, "min": 6, "subreg": 4, "reg": 2}
    for _, el in reps:
        assert is_ad_nilpotent(el)


def test_g2_subregular(alg):
    g2 = alg("G", 2)
    reps, complete = factor_reps(g2, "G", 2, (0, 1))
    assert not complete
    (l0, z), (ls, e) = reps
    assert (l0, ls) == ("0", "subreg")
    assert centralizer_dim(g2, e) == 4
    assert is_ad_nilpotent(e)


def test_unsupported_factor(alg):
    b3 = alg("B", 3)
    with pytest.raises(UnsupportedLeviError):
        factor_reps(b3, "B", 3, (0, 1, 2))


def test_direct_sum_reps_counts(alg, sl2sl2):
    factors = [("A", 1, (0,)), ("A", 1, (1,))]
    reps = direct_sum_reps(sl2sl2, factors)
    assert len(reps) == 4
    labels = {r.label for r in reps}
    assert labels == {"[1,1]+[1,1]", "[2]+[1,1]", "[1,1]+[2]", "[2]+[2]"}
    a3 = alg("A", 3)
    _, _, factors = subsystem(a3.root_system, [0, 2])
    reps = direct_sum_reps(a3, factors)
    assert len(reps) == 4
    b3 = alg("B", 3)
    _, _, factors = subsystem(b3.root_system, [1, 2])
    reps = direct_sum_reps(b3, factors)
    assert len(reps) == 4 and all(r.complete_list for r in reps)


def test_direct_sum_reps_a1_a2(alg):
    a3 = alg("A", 3)
    factors = [("A", 1, (0,)), ("A", 2, (1, 2))]   # not a Levi of A3; structural only
    with pytest.raises(Exception):
        # overlapping nodes would double-use roots; guard is the partition size
        direct_sum_reps(a3, [("A", 2, (0, 1)), ("A", 2, (1, 2))])
    b4 = alg("B", 4)
    _, _, factors = subsystem(b4.root_system, [0, 2, 3])
    reps = direct_sum_reps(b4, factors)
    assert len(reps) == 2 * 4   # p(2) * four so5 orbits


def test_lemma_aaa_h_values():
    assert lemma_aaa_h((2, 1)) == (1, -2)
    assert lemma_aaa_h((2, 2)) == (1, -1)
    w = lemma_aaa_h((3, 2, 1))
    assert all(a > b for a, b in zip(w, w[1:]))
    assert sum(d * a for d, a in zip((3, 2, 1), w)) == 0
    with pytest.raises(ValueError):
        lemma_aaa_h((3,))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_aaa_witness_every_partition(alg, n):
    g = alg("A", n - 1)
    nodes = tuple(range(n - 1))
    for parts in partitions(n):
        if len(parts) < 2:
            continue
        x = type_a_rep(g, nodes, parts)
        h = aaa_h_element(g, nodes, parts)
        mh = centralizer(g, h)
        assert centralizer_dim(mh, x) == n - 1
        mx = centralizer(g, x)
        assert centralizer_dim(mx, h) == n - 1


def test_rep_dims_constant_under_exponential(alg):
    import random
    rng = random.Random(0)
    b2 = alg("B", 2)
    reps, _ = factor_reps(b2, "B", 2, (0, 1))
    for _, el in reps:
        n = b2.x((1, 1)) * rng.randint(-2, 2) + b2.x((1, 2)) * rng.randint(-2, 2)
        assert centralizer_dim(b2, exp_ad(n, el)) == centralizer_dim(b2, el)
