import random

import pytest

from commvar.rootsystem import (InvalidTypeError, build_root_system, cartan_matrix,
                                direct_sum, is_positive, root_length_classes,
                                subsystem, weyl_orbit_count)

ALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 8),
             ("B", 2), ("B", 3), ("B", 4), ("B", 8),
             ("C", 3), ("C", 4), ("C", 8),
             ("D", 3), ("D", 4), ("D", 8),
             ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

COUNT = {"A": lambda r: r * (r + 1), "B": lambda r: 2 * r * r, "C": lambda r: 2 * r * r,
         "D": lambda r: 2 * r * (r - 1), "E": lambda r: {6: 72, 7: 126, 8: 240}[r],
         "F": lambda r: 48, "G": lambda r: 12}

LACETY = {"A": 1, "D": 1, "E": 1, "B": 2, "C": 2, "F": 2, "G": 3}


@pytest.mark.parametrize("label,rank", ALL_TYPES)
def test_root_counts_and_lacety(label, rank):
    rs = build_root_system(label, rank)
    assert len(rs.roots) == COUNT[label](rank)
    assert rs.lacety == LACETY[label]
    assert len(rs.positive_roots) == len(rs.roots) // 2


@pytest.mark.parametrize("label,rank", ALL_TYPES)
def test_root_invariants(label, rank):
    rs = build_root_system(label, rank)
    roots = set(rs.roots)
    zero = tuple([0] * rank)
    assert zero not in roots
    for b in roots:
        assert tuple(-x for x in b) in roots
        assert all(x >= 0 for x in b) or all(x <= 0 for x in b)
    a = rs.cartan
    for i in range(rank):
        assert a[i][i] == 2
        for j in range(rank):
            if i != j:
                assert a[i][j] in (0, -1, -2, -3)


def test_rank1_roots_explicit():
    rs = build_root_system("A", 1)
    assert set(rs.roots) == {(1,), (-1,)}


def test_a2_closure_count_brute_force():
    # independent oracle: close the simple roots under reflections directly
    a = cartan_matrix("A", 2)
    simple = [(1, 0), (0, 1)]
    roots = set(simple) | {(-1, 0), (0, -1)}
    changed = True
    while changed:
        changed = False
        for b in list(roots):
            for i in range(2):
                p = sum(b[j] * a[j][i] for j in range(2))
                r = tuple(b[j] - p * (1 if j == i else 0) for j in range(2))
                if r not in roots:
                    roots.add(r)
                    changed = True
    assert len(roots) == 6
    assert set(build_root_system("A", 2).roots) == roots


def test_invalid_types_rejected():
    for label, rank in [("A", 0), ("B", 1), ("D", 2), ("E", 5), ("E", 9),
                        ("F", 3), ("G", 3), ("Z", 2)]:
        with pytest.raises(InvalidTypeError):
            build_root_system(label, rank)


def test_c2_is_b2_alias():
    rs = build_root_system("C", 2)
    assert rs.type_label == "B"
    assert rs.requested_label == "C2"
    assert len(rs.roots) == 8


@pytest.mark.parametrize("label,rank,expected", [
    ("A", 3, 1), ("B", 2, 2), ("G", 2, 2), ("F", 4, 2), ("D", 4, 1), ("C", 3, 2),
])
def test_length_classes_match_weyl_orbits(label, rank, expected):
    rs = build_root_system(label, rank)
    assert root_length_classes(rs) == expected
    # brute-force orbit closure under the simple reflections
    assert weyl_orbit_count(rs) == expected


def test_subsystem_singleton_b2():
    rs = build_root_system("B", 2)
    phi, plus, factors = subsystem(rs, [1])
    assert set(phi) == {(0, 1), (0, -1)}
    assert plus == [(0, 1)]
    assert [(lbl, rk) for lbl, rk, _ in factors] == [("A", 1)]


def test_subsystem_a3_disconnected():
    rs = build_root_system("A", 3)
    phi, plus, factors = subsystem(rs, [0, 2])
    assert len(phi) == 4
    assert sorted((lbl, rk) for lbl, rk, _ in factors) == [("A", 1), ("A", 1)]


def test_subsystem_f4_short_a2():
    rs = build_root_system("F", 4)
    phi, _, factors = subsystem(rs, [2, 3])
    assert [(lbl, rk) for lbl, rk, _ in factors] == [("A", 2)]
    # all six roots short (squared length 2 in the short = 2 normalization)
    assert {rs.length_sq(b) for b in phi} == {2}


def test_subsystem_full_and_empty():
    rs = build_root_system("B", 3)
    phi, _, factors = subsystem(rs, range(3))
    assert set(phi) == set(rs.roots)
    assert [(lbl, rk) for lbl, rk, _ in factors] == [("B", 3)]
    phi, plus, factors = subsystem(rs, [])
    assert phi == [] and plus == [] and factors == []


def _component_oracle(rs, nodes):
    """Independent check of the factor split: connected components of the
    subdiagram with their bond multisets."""
    nodes = sorted(nodes)
    seen = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            for v in nodes:
                if v != u and rs.cartan[u][v] != 0 and v not in comp:
                    stack.append(v)
        seen |= comp
        bonds = sorted(rs.cartan[u][v] * rs.cartan[v][u]
                       for u in comp for v in comp if u < v and rs.cartan[u][v])
        comps.append((len(comp), bonds))
    return sorted(comps)


@pytest.mark.parametrize("label,rank", [("B", 4), ("F", 4), ("E", 6), ("D", 4)])
def test_factor_decomposition_against_graph_oracle(label, rank):
    rs = build_root_system(label, rank)
    rng = random.Random(0)
    for _ in range(20):
        size = rng.randint(1, min(3, rank))
        nodes = rng.sample(range(rank), size)
        _, _, factors = subsystem(rs, nodes)
        got = sorted((rk, sorted(
            cartan_matrix(lbl, rk)[u][v] * cartan_matrix(lbl, rk)[v][u]
            for u in range(rk) for v in range(rk) if u < v and cartan_matrix(lbl, rk)[u][v]))
            for lbl, rk, _ in factors)
        assert got == _component_oracle(rs, nodes)


def test_direct_sum_structure():
    rs = direct_sum(build_root_system("A", 1), build_root_system("B", 2))
    assert rs.rank == 3
    assert len(rs.roots) == 2 + 8
    assert rs.lacety == 2
    assert [lbl for lbl, _ in rs.factors] == ["A1", "B2"]


def test_coroot_coordinates_are_integral():
    for label, rank in [("B", 2), ("G", 2), ("F", 4), ("C", 3)]:
        rs = build_root_system(label, rank)
        for b in rs.roots:
            cc = rs.coroot_coords(b)
            assert all(isinstance(c, int) for c in cc)
            # beta(H_beta) = 2
            assert rs.root_on_coroot(b, b) == 2
