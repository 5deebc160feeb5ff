"""The rank-one commuting variety: ideal, Jacobian ranks, toric normality.

Coordinates (x1, x2, x3, y1, y2, y3) over an sl2-triple basis (e, f, h).
The variety is cut out by the three 2x2 minors of [[x1,x2,x3],[y1,y2,y3]];
its invertible-coordinate part is a 4-dimensional subtorus of the diagonal
6-torus, so the variety is the toric closure of that torus orbit and
normality reduces to saturation of the orbit character semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from . import linalg

# generators as index pairs: v[a]*v[b] - v[c]*v[d]
_GENERATORS = (
    ((1, 5), (2, 4)),    # x2 y3 - x3 y2
    ((0, 4), (1, 3)),    # x1 y2 - x2 y1
    ((0, 5), (2, 3)),    # x1 y3 - x3 y1
)

# rows spanning the relation lattice of the torus characters
RELATION_MATRIX = (
    (1, -1, 0, -1, 1, 0),
    (1, 0, -1, -1, 0, 1),
)


def ideal_generators():
    """The three minor polynomials as ((a,b),(c,d)) index-pair records."""
    return _GENERATORS


def evaluate_generators(point) -> tuple:
    v = [Fraction(t) for t in point]
    return tuple(v[a] * v[b] - v[c] * v[d] for (a, b), (c, d) in _GENERATORS)


def on_variety(point) -> bool:
    return all(g == 0 for g in evaluate_generators(point))


def jacobian(point) -> list[list[Fraction]]:
    v = [Fraction(t) for t in point]
    rows = []
    for (a, b), (c, d) in _GENERATORS:
        row = [Fraction(0)] * 6
        row[a] += v[b]
        row[b] += v[a]
        row[c] -= v[d]
        row[d] -= v[c]
        rows.append(row)
    return rows


def jacobian_rank(point) -> int:
    return linalg.rank(jacobian(point))


def bracket_coordinates(point):
    """[x, y] in the (e, f, h) basis, via the Chevalley engine.

    Cross-check hook: each coordinate is proportional to one ideal
    generator (the pairing differs by the bracket constants only).
    """
    from .rootsystem import build_root_system
    from .chevalley import build_lie_algebra

    alg = build_lie_algebra(build_root_system("A", 1))
    e = alg.x((1,))
    f = -1 * alg.x((-1,))
    h = alg.h(0)
    x1, x2, x3, y1, y2, y3 = [Fraction(t) for t in point]
    x = e * x1 + f * x2 + h * x3
    y = e * y1 + f * y2 + h * y3
    z = alg.bracket(x, y)
    # coordinates of z over (e, f, h): e = X_a, f = -X_{-a}, h = H
    ce = z.coeffs.get(alg.index_of_root[(1,)], Fraction(0))
    cf = -z.coeffs.get(alg.index_of_root[(-1,)], Fraction(0))
    ch = z.coeffs.get(0, Fraction(0))
    return (ce, cf, ch)


@dataclass(frozen=True)
class AffineSemigroup:
    """Finitely generated subsemigroup of a lattice."""

    ambient_rank: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(all(x == 0 for x in g) for g in self.generators):
            raise ValueError("generators must be nonzero")


def torus_semigroup() -> AffineSemigroup:
    """Characters of the 4-torus acting on the orbit of the identity.

    The quotient of Z^6 by the relation lattice is free of rank 4 (both
    invariant factors are 1); the semigroup is generated by the images of
    the six coordinate characters.
    """
    L = [list(r) for r in RELATION_MATRIX]
    u, d, v = linalg.smith_normal_form(L)
    diag = [d[i][i] for i in range(2)]
    if diag != [1, 1]:
        raise AssertionError("relation lattice must be primitive")
    # coordinates w -> w V; the image lattice splits off the first two coords
    gens = []
    for i in range(6):
        w = [int(i == j) for j in range(6)]
        wv = [sum(w[k] * v[k][j] for k in range(6)) for j in range(6)]
        gens.append(tuple(wv[2:]))
    sg = AffineSemigroup(4, tuple(gens))
    for rel in RELATION_MATRIX:
        img = [sum(rel[k] * v[k][j] for k in range(6)) for j in range(2, 6)]
        if any(img):
            raise AssertionError("relation vectors must map to zero")
    if linalg.rank([list(g) for g in gens]) != 4:
        raise AssertionError("generator images must span the rank-4 quotient")
    return sg


def _group_membership(gens: list[tuple[int, ...]]):
    """Z-span membership test via Smith normal form."""
    g = [list(v) for v in gens]
    u, d, v = linalg.smith_normal_form(g)
    k, r = len(g), len(g[0])
    diag = [d[i][i] for i in range(min(k, r))]
    nz = sum(1 for x in diag if x)

    def contains(w) -> bool:
        wv = [sum(w[t] * v[t][j] for t in range(r)) for j in range(r)]
        for j in range(r):
            if j < nz:
                if wv[j] % diag[j]:
                    return False
            elif wv[j]:
                return False
        return True

    return contains


def _cone_membership(gens: list[tuple[int, ...]]):
    """Exact cone membership by Caratheodory decomposition over subsets."""
    r = len(gens[0])
    subsets = []
    for k in range(1, r + 1):
        for sel in combinations(range(len(gens)), k):
            cols = [gens[i] for i in sel]
            if linalg.rank([list(c) for c in cols]) == k:
                subsets.append(sel)

    def contains(w) -> bool:
        if all(x == 0 for x in w):
            return True
        for sel in subsets:
            rows = [[Fraction(gens[i][j]) for i in sel] for j in range(r)]
            sol = linalg.solve(rows, [Fraction(x) for x in w])
            if sol is not None and all(t >= 0 for t in sol):
                # solution must be exact: verify residual
                ok = all(sum(sol[a] * gens[i][j] for a, i in enumerate(sel)) == w[j]
                         for j in range(r))
                if ok:
                    return True
        return False

    return contains


def _find_pointing_functional(gens: list[tuple[int, ...]]) -> tuple[int, ...]:
    r = len(gens[0])
    for radius in range(1, 5):
        for ell in product(range(-radius, radius + 1), repeat=r):
            if all(sum(a * b for a, b in zip(ell, g)) > 0 for g in gens):
                return ell
    raise ValueError("cone is not pointed (no small pointing functional); "
                     "bounded enumeration does not apply")


def _semigroup_membership(gens: list[tuple[int, ...]], ell: tuple[int, ...]):
    weights = [sum(a * b for a, b in zip(ell, g)) for g in gens]

    def contains(w, memo=None) -> bool:
        if memo is None:
            memo = {}
        key = tuple(w)
        if key in memo:
            return memo[key]
        if all(x == 0 for x in w):
            return True
        height = sum(a * b for a, b in zip(ell, w))
        if height < 0:
            return False
        out = False
        for g, wt in zip(gens, weights):
            if wt <= height:
                nxt = tuple(a - b for a, b in zip(w, g))
                if contains(nxt, memo):
                    out = True
                    break
        memo[key] = out
        return out

    return contains


def is_saturated(sg: AffineSemigroup) -> bool:
    """Whether the semigroup equals group(S) meet cone(S).

    Every potential witness of non-saturation reduces modulo S to a lattice
    point of the zonotope of the generators (Caratheodory), so enumerating
    the integer points of the zonotope bounding box decides saturation.
    """
    gens = [tuple(g) for g in sg.generators]
    if not gens:
        raise ValueError("no generators")
    r = sg.ambient_rank
    in_group = _group_membership(gens)
    in_cone = _cone_membership(gens)
    ell = _find_pointing_functional(gens)
    in_semigroup = _semigroup_membership(gens, ell)
    lo = [sum(min(0, g[j]) for g in gens) for j in range(r)]
    hi = [sum(max(0, g[j]) for g in gens) for j in range(r)]
    memo: dict = {}
    for w in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if not in_group(w):
            continue
        if not in_cone(w):
            continue
        if not in_semigroup(w, memo):
            return False
    return True
