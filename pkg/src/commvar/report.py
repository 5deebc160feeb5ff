"""The built-in verification suite behind the verify-paper command.

Every check compares an engine computation against a pinned expected
value and yields {check_id, paper_ref, expected, computed, status} with
status pass / fail / inconclusive.  The paper_ref field holds a short
description of the claim being checked.

Two checks in the so5 minimal-orbit case pin expected values that the
engine's exact computations contradict (see the repository notes); they
are kept as stated and report their honest failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg, sl2toric
from .rootsystem import build_root_system, direct_sum, root_length_classes
from .chevalley import build_lie_algebra, sl2_triple_check, exp_ad
from .centralizers import (Subspace, cartan_subspace, centralizer, centralizer_dim,
                           kernel_of_root, mu_rank_identity, orbit_closure_dim)
from .decomp import commvar_irr_codim, levi_data, signature_class_entries, zero_rep_codim
from .irrlocus import (exact_point_count, generic_centralizer_dim,
                       irregular_locus_dim, verify_linear_component)
from .nilpotents import Partition, UnsupportedLeviError, aaa_h_element, lemma_aaa_h, partitions, type_a_rep

# Acceptance table: codim of the irregular locus per simple type.
TABLE_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4),
               ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4),
               ("D", 4), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
TABLE_EXPECTED = {"A": 4, "D": 4, "E": 4, "B": 3, "C": 3, "F": 3, "G": 2}

# Frozen before the build by the independent matrix-realization oracle
# (tools/oracles): exhaustive counts of irregular points in the so5
# minimal-orbit centralizer, and the inclusion-exclusion counts of the six
# printed 3-dim subspaces (which disagree: the published component list for
# this case is wrong; the true locus is a 4-dim determinantal cone).
SO5_MIN_TRUE_COUNTS = {5: 725, 13: 30589, 17: 88145}
SIX_SUBSPACE_IE_COUNTS = {5: 565, 13: 11869}


@dataclass
class CheckResult:
    check_id: str
    paper_ref: str
    expected: object
    computed: object
    status: str

    def as_dict(self) -> dict:
        return {"check_id": self.check_id, "paper_ref": self.paper_ref,
                "expected": self.expected, "computed": self.computed,
                "status": self.status}


def _result(check_id, paper_ref, expected, computed, inconclusive=False) -> CheckResult:
    if inconclusive:
        status = "inconclusive"
    else:
        status = "pass" if expected == computed else "fail"
    return CheckResult(check_id, paper_ref, _jsonable(expected), _jsonable(computed), status)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


class _AlgebraPool:
    def __init__(self, factory=None):
        self._factory = factory or (lambda lbl, r: build_lie_algebra(build_root_system(lbl, r)))
        self._cache = {}

    def get(self, lbl, r):
        if (lbl, r) not in self._cache:
            self._cache[(lbl, r)] = self._factory(lbl, r)
        return self._cache[(lbl, r)]

    def sl2sl2(self):
        if "sl2sl2" not in self._cache:
            self._cache["sl2sl2"] = build_lie_algebra(
                direct_sum(build_root_system("A", 1), build_root_system("A", 1)))
        return self._cache["sl2sl2"]


def _four_cases(pool):
    """(name, algebra, nilpotent x, expected dim a_x) for the rank-2 cases."""
    a11 = pool.sl2sl2()
    a2 = pool.get("A", 2)
    b2 = pool.get("B", 2)
    g2 = pool.get("G", 2)
    return [
        ("sl2sl2-e0", a11, a11.x((1, 0)), 4),
        ("sl3-subreg", a2, a2.x((1, 0)), 4),
        ("so5-subreg", b2, b2.x((0, 1)), 4),
        ("so5-min", b2, b2.x((1, 0)), 6),
        ("g2-subreg", g2, g2.x((0, 1)) + g2.x((3, 1)), 4),
    ]


# -- criterion 1: centralizer dimensions and bases ------------------------------


def checks_centralizers(pool, seed=0):
    out = []
    for name, alg, x, want in _four_cases(pool):
        got = centralizer_dim(alg, x)
        out.append(_result(f"cent-dim/{name}", f"dimension of the centralizer ({name})",
                           want, got))
    a2 = pool.get("A", 2)
    span = Subspace(a2, [a2.x((1, 0)), a2.x((1, 1)), a2.x((0, -1)),
                         a2.h(0) + 2 * a2.h(1)])
    got = centralizer(a2, a2.x((1, 0))).same_span(span)
    out.append(_result("cent-basis/sl3", "subregular centralizer basis in sl3",
                       True, got))
    b2 = pool.get("B", 2)
    span = Subspace(b2, [b2.x((0, 1)), b2.x((1, 2)), b2.x((-1, 0)),
                         b2.coroot_element((1, 1))])
    out.append(_result("cent-basis/so5-subreg", "subregular centralizer basis in so5",
                       True, centralizer(b2, b2.x((0, 1))).same_span(span)))
    span = Subspace(b2, [b2.x((1, 0)), b2.x((1, 1)), b2.x((1, 2)), b2.x((0, -1)),
                         b2.x((-1, -2)), b2.coroot_element((1, 2))])
    out.append(_result("cent-basis/so5-min", "minimal-orbit centralizer basis in so5",
                       True, centralizer(b2, b2.x((1, 0))).same_span(span)))
    g2 = pool.get("G", 2)
    e = g2.x((0, 1)) + g2.x((3, 1))
    span = Subspace(g2, [e, g2.x((1, 1)), g2.x((3, 2)), g2.x((2, 1))])
    cg = centralizer(g2, e)
    out.append(_result("cent-basis/g2-subreg", "subregular centralizer basis in G2",
                       True, cg.same_span(span)))
    line = Subspace(g2, [g2.x((3, 2))])
    prop = all(line.contains(g2.bracket(y, w)) for y in cg.basis for w in cg.basis)
    out.append(_result("cent-bracket/g2-subreg",
                       "brackets inside the G2 subregular centralizer stay in one line",
                       True, prop))
    f = -2 * g2.x((0, -1)) - 2 * g2.x((-3, -1))
    h = 2 * g2.coroot_element((0, 1)) + 2 * g2.coroot_element((3, 1))
    out.append(_result("sl2-triple/g2", "the G2 subregular sl2-triple relations",
                       True, sl2_triple_check(e, f, h)))
    a11 = pool.sl2sl2()
    out.append(_result("cent-generic/sl2sl2",
                       "generic centralizer dimension inside the sl2+sl2 centralizer",
                       2, generic_centralizer_dim(a11, a11.x((1, 0)), seed=seed)))
    return out


# -- criterion 2: codimensions by exhaustive counts ------------------------------


def checks_codims(pool, fast=False, workers=None):
    expected = {"sl2sl2-e0": 3, "sl3-subreg": 3, "so5-subreg": 1,
                "so5-min": 3, "g2-subreg": 0}
    out = []
    for name, alg, x, _ in _four_cases(pool):
        est = irregular_locus_dim(alg, x, fast=fast, workers=workers)
        if not est.conclusive:
            out.append(CheckResult(f"codim/{name}",
                                   f"codim of the irregular set in the centralizer ({name})",
                                   expected[name], f"inconclusive: {est.notes}",
                                   "inconclusive"))
            continue
        codim = centralizer_dim(alg, x) - est.dim
        out.append(_result(f"codim/{name}",
                           f"codim of the irregular set in the centralizer ({name})",
                           expected[name], codim))
    return out


# -- criterion 3: the codimension table ------------------------------------------


def checks_table(pool, fast=False, workers=None, max_rank=4):
    types = [(lbl, r) for lbl, r in TABLE_TYPES if r <= max(max_rank, 4) or lbl in "EFG"]
    if max_rank > 4:
        for lbl in ("A", "B", "C", "D"):
            for r in range(5, max_rank + 1):
                try:
                    build_root_system(lbl, r)
                except Exception:
                    continue
                types.append((lbl, r))
    out = []
    for lbl, r in types:
        g = pool.get(lbl, r)
        try:
            got, _ledger = commvar_irr_codim(g, fast=fast, workers=workers)
        except UnsupportedLeviError as exc:
            out.append(CheckResult(f"table/{lbl}{r}",
                                   "codim of the irregular locus of the commuting variety",
                                   TABLE_EXPECTED[lbl], f"unsupported: {exc}", "fail"))
            continue
        out.append(_result(f"table/{lbl}{r}",
                           "codim of the irregular locus of the commuting variety",
                           TABLE_EXPECTED[lbl], got))
        out.append(_result(f"table-lacety/{lbl}{r}",
                           "codim plus lacety equals five",
                           5, got + g.root_system.lacety))
    return out


# -- criterion 4: formula checks ---------------------------------------------------


def checks_formulas(pool, seed=0, fast=False, workers=None):
    out = []
    rng = random.Random(seed)
    # dim of the closure of D(alpha, 0) is m - 3, for every root length class
    for lbl, r in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2),
                   ("D", 4), ("F", 4)]:
        alg = pool.get(lbl, r)
        dims = set()
        for i in range(alg.rank_r):
            alpha = tuple(1 if j == i else 0 for j in range(alg.rank_r))
            dims.add(orbit_closure_dim(kernel_of_root(alg, alpha)))
        out.append(_result(f"formula/dim-D-alpha0/{lbl}{r}",
                           "closure of the subregular semisimple class has codim 3",
                           {alg.dim_m - 3}, dims))
    # c(I, 0) = 3 + |I| via the component formula, per Levi signature
    for sig in [("A1",), ("A1", "A1"), ("A2",), ("B2",), ("A1", "A2"), ("A3",), ("G2",)]:
        from .decomp import standalone_algebra
        s = standalone_algebra(sig)
        out.append(_result(f"formula/c-I0/{'+'.join(sig)}",
                           "zero-orbit class has codim 3 in its Levi",
                           3, zero_rep_codim(s)))
    # counting cross-check of the same formula where enumeration is feasible
    a1 = pool.get("A", 1)
    est = irregular_locus_dim(a1, a1.zero(), fast=fast, workers=workers)
    out.append(_result("formula/c-I0-count/A1", "irregular locus of sl2 is the origin",
                       (0, True), (est.dim, est.conclusive)))
    a11 = pool.sl2sl2()
    est = irregular_locus_dim(a11, a11.zero(), fast=fast, workers=workers)
    out.append(_result("formula/c-I0-count/A1+A1",
                       "irregular locus of sl2+sl2 has codim 3",
                       (3, True), (est.dim, est.conclusive)))
    # product splitting of the irregular set over the center of the Levi
    out.extend(_dimIgx_checks(pool, fast=fast, workers=workers))
    # rank identities of the commutator-map differential
    for lbl, r in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)]:
        alg = pool.get(lbl, r)
        ok = 0
        for _ in range(100):
            a = alg.zero()
            b = alg.zero()
            for k in range(alg.dim_m):
                a = a + alg.basis_element(k) * rng.randint(-3, 3)
                b = b + alg.basis_element(k) * rng.randint(-3, 3)
            try:
                mu_rank_identity(a, b)
                ok += 1
            except AssertionError:
                pass
        out.append(_result(f"formula/mu-rank/{lbl}{r}",
                           "commutator-map differential rank identities on random pairs",
                           100, ok))
    return out


def _dimIgx_checks(pool, fast=False, workers=None):
    """dim I(g(I)_x) = (r - |I|) + dim I(s(I)_x), tested at count level."""
    out = []
    cases = [("B", 3, (1, 2), "subreg", (0, 0, 1)),
             ("B", 3, (1, 2), "min", (0, 1, 0)),
             ("A", 3, (0, 1), "[2,1]", (1, 1, 0))]
    for lbl, r, I, rep_name, xroot in cases:
        g = pool.get(lbl, r)
        x = g.x(xroot)
        tI, sI = levi_data(g, I)
        gI = Subspace(g, tI.basis + sI.basis, name="g(I)")
        amb_cent = centralizer(gI, x)
        s_cent = centralizer(sI, x)
        primes = [5] if amb_cent.dim > 6 else ([5, 13] if fast else [5, 13, 17])
        ok = True
        obs = []
        for p in primes:
            na = exact_point_count(g, x, p, subspace=amb_cent, workers=workers)
            ns = exact_point_count(g, x, p, subspace=s_cent, workers=workers)
            obs.append((p, na, ns))
            ok = ok and na == p ** (g.rank_r - len(I)) * ns
        out.append(_result(f"formula/dimIgx/{lbl}{r}-{rep_name}",
                           "ambient Levi irregular-set count splits off the center torus",
                           True, ok if ok else obs))
    return out


# -- criterion 5: weighted-diagonal witnesses --------------------------------------


def checks_aaa(pool):
    out = []
    all_ok = True
    details = []
    for n in range(2, 7):
        alg = pool.get("A", n - 1)
        nodes = tuple(range(n - 1))
        for parts in partitions(n):
            if len(parts) < 2:
                continue
            weights = lemma_aaa_h(parts)
            cond = all(a > b for a, b in zip(weights, weights[1:])) and \
                sum(d * a for d, a in zip(parts, weights)) == 0
            x = type_a_rep(alg, nodes, parts)
            h = aaa_h_element(alg, nodes, parts)
            mh = centralizer(alg, h)
            dim_mh_x = centralizer_dim(mh, x)
            mx = centralizer(alg, x)
            dim_mx_h = centralizer_dim(mx, h)
            good = cond and dim_mh_x == n - 1 and dim_mx_h == n - 1
            all_ok = all_ok and good
            if not good:
                details.append((n, parts, weights, dim_mh_x, dim_mx_h))
    out.append(_result("aaa/witness-all-partitions",
                       "weighted diagonal makes each Jordan type regular in its "
                       "centralizer (n <= 6)",
                       True, all_ok if all_ok else details))
    return out


# -- criterion 6: the six-subspace set identity ------------------------------------


def _so5_min_adapted(pool) -> tuple:
    b2 = pool.get("B", 2)
    x = b2.x((1, 0))
    adapted = Subspace(b2, [b2.x((1, 0)), b2.x((1, 1)), b2.x((1, 2)), b2.x((0, -1)),
                            b2.x((-1, -2)), b2.coroot_element((1, 2))])
    if not centralizer(b2, x).same_span(adapted):
        raise AssertionError("adapted basis must span the centralizer")
    return b2, x, adapted


def six_subspace_ie_count(p: int) -> int:
    """Inclusion-exclusion count over F_p of the six printed subspaces.

    Coordinates over the adapted centralizer basis; the two conjugate
    members pair the fourth coordinate with +/- sqrt(-1) times the second.
    """
    i = next(t for t in range(2, p) if (t * t + 1) % p == 0)
    e = [[1 if k == j else 0 for k in range(6)] for j in range(6)]
    ann = {
        1: [e[1], e[4], e[5]],
        2: [e[3], e[4], e[5]],
        3: [e[2], e[4], e[5]],
        4: [e[1], e[2], e[5]],
        5: [[0, 1, 0, (-i) % p, 0, 0], e[4], e[5]],
        6: [[0, 1, 0, i % p, 0, 0], e[4], e[5]],
    }
    total = 0
    for k in range(1, 7):
        for sub in combinations(range(1, 7), k):
            rows = [r[:] for s in sub for r in ann[s]]
            d = 6 - linalg.rank_mod_p(rows, p)
            total += (-1) ** (k + 1) * p ** d
    return total


def checks_six_subspaces(pool, workers=None):
    out = []
    ie = {p: six_subspace_ie_count(p) for p in (5, 13)}
    out.append(_result("so5-ie/frozen",
                       "inclusion-exclusion over the six printed subspaces matches "
                       "the frozen oracle constants",
                       SIX_SUBSPACE_IE_COUNTS, ie))
    b2, x, adapted = _so5_min_adapted(pool)
    counts = {p: exact_point_count(b2, x, p, subspace=adapted, workers=workers)
              for p in (5, 13)}
    out.append(_result("so5-ie/set-identity",
                       "exhaustive count equals the six-subspace union count",
                       ie, counts))
    return out


# -- criterion 7: the rank-one example ----------------------------------------------


def checks_sl2_example(pool, seed=0):
    out = []
    rng = random.Random(seed)
    ranks = []
    a1 = pool.get("A", 1)
    e = a1.x((1,))
    f = -1 * a1.x((-1,))
    h = a1.h(0)
    basis = (e, f, h)
    pts = 0
    while pts < 100:
        coords = [rng.randint(-4, 4) for _ in range(3)]
        lam = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if all(c == 0 for c in coords):
            continue
        x = sum((b * c for b, c in zip(basis, coords)), a1.zero())
        y = x * lam
        n = a1.x((1,)) * rng.randint(-2, 2) if rng.random() < 0.5 else \
            a1.x((-1,)) * rng.randint(-2, 2)
        x, y = exp_ad(n, x), exp_ad(n, y)
        point = _sl2_coords(a1, x) + _sl2_coords(a1, y)
        if all(v == 0 for v in point):
            continue
        if not sl2toric.on_variety(point):
            raise AssertionError("constructed point must lie on the variety")
        ranks.append(sl2toric.jacobian_rank(point))
        pts += 1
    out.append(_result("sl2/jacobian-nonzero",
                       "Jacobian rank 2 at 100 nonzero points of the variety",
                       {2}, set(ranks)))
    out.append(_result("sl2/jacobian-origin", "Jacobian rank 0 at the origin",
                       0, sl2toric.jacobian_rank((0,) * 6)))
    sg = sl2toric.torus_semigroup()
    out.append(_result("sl2/torus-rank", "orbit torus has rank 4", 4, sg.ambient_rank))
    out.append(_result("sl2/saturated", "orbit character semigroup is saturated "
                       "(the variety is normal)", True, sl2toric.is_saturated(sg)))
    return out


def _sl2_coords(a1, v) -> tuple:
    ce = v.coeffs.get(a1.index_of_root[(1,)], Fraction(0))
    cf = -v.coeffs.get(a1.index_of_root[(-1,)], Fraction(0))
    ch = v.coeffs.get(0, Fraction(0))
    return (ce, cf, ch)


# -- criterion 8: condensed property suite -------------------------------------------


def checks_properties(pool, seed=0):
    out = []
    rng = random.Random(seed)
    # exhaustive Jacobi for the rank <= 2 algebras, m <= 14
    ok = True
    for lbl, r in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        alg = pool.get(lbl, r)
        basis = alg.basis()
        for i, j, k in combinations(range(alg.dim_m), 3):
            s = alg.bracket(alg.bracket(basis[i], basis[j]), basis[k]) \
                + alg.bracket(alg.bracket(basis[j], basis[k]), basis[i]) \
                + alg.bracket(alg.bracket(basis[k], basis[i]), basis[j])
            if not s.is_zero():
                ok = False
    out.append(_result("property/jacobi-exhaustive",
                       "Jacobi identity on all basis triples, rank <= 2 types",
                       True, ok))
    # bilinearity / antisymmetry fuzz
    alg = pool.get("B", 2)
    ok = True
    for _ in range(10 ** 4):
        ks = rng.sample(range(alg.dim_m), 3)
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        x = alg.basis_element(ks[0]) * a
        y = alg.basis_element(ks[1]) * b + alg.basis_element(ks[2])
        if alg.bracket(x, y) + alg.bracket(y, x) != alg.zero():
            ok = False
            break
        lhs = alg.bracket(x, y)
        rhs = alg.bracket(alg.basis_element(ks[0]), alg.basis_element(ks[1])) * (a * b) \
            + alg.bracket(alg.basis_element(ks[0]), alg.basis_element(ks[2])) * a
        if lhs != rhs:
            ok = False
            break
    out.append(_result("property/bracket-fuzz",
                       "antisymmetry and bilinearity on 10^4 random cases", True, ok))
    # the irregular set of a centralizer is a cone
    b2 = pool.get("B", 2)
    x = b2.x((0, 1))
    sub = centralizer(b2, x)
    ok = True
    for _ in range(50):
        coords = [rng.randint(-5, 5) for _ in range(sub.dim)]
        lam = rng.choice([2, 3, Fraction(1, 2), -1, 5])
        y = sub.element_from_coords(coords)
        d1 = centralizer_dim(sub, y)
        d2 = centralizer_dim(sub, y * lam)
        if d1 != d2:
            ok = False
    out.append(_result("property/cone-invariance",
                       "centralizer dimension inside a_x is scale-invariant", True, ok))
    # Smith form sanity on random integer matrices
    ok = True
    for _ in range(25):
        nr, nc = rng.randint(1, 4), rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        u, d, v = linalg.smith_normal_form(m)
        prod = linalg.mat_mul(linalg.mat_mul(u, m), v)
        if prod != d:
            ok = False
        if abs(linalg.det_int(u)) != 1 or abs(linalg.det_int(v)) != 1:
            ok = False
        diag = [d[i][i] for i in range(min(nr, nc))]
        for a, b in zip(diag, diag[1:]):
            if a and b % a:
                ok = False
            if a == 0 and b != 0:
                ok = False
    out.append(_result("property/smith-form",
                       "random Smith forms: unimodular factors, divisibility chain",
                       True, ok))
    return out


# -- runner ---------------------------------------------------------------------------


def run_all(fast: bool = False, seed: int = 0, workers: int | None = None,
            max_rank: int = 4, algebra_factory=None) -> list[CheckResult]:
    pool = _AlgebraPool(algebra_factory)
    results: list[CheckResult] = []
    results += checks_centralizers(pool, seed=seed)
    results += checks_codims(pool, fast=fast, workers=workers)
    results += checks_table(pool, fast=fast, workers=workers, max_rank=max_rank)
    results += checks_formulas(pool, seed=seed, fast=fast, workers=workers)
    results += checks_aaa(pool)
    results += checks_six_subspaces(pool, workers=workers)
    results += checks_sl2_example(pool, seed=seed)
    results += checks_properties(pool, seed=seed)
    results.sort(key=lambda r: r.check_id)
    return results
