"""Chevalley bases with integer structure constants, brackets, and ad matrices.

Basis order: H_{alpha_1}..H_{alpha_r}, then the root vectors X_beta with the
roots sorted by (height, coordinates).  Normalization: [X_b, X_{-b}] = -H_b
where H_b is the coroot (so [X_{-b}, X_b] = H_b and b(H_b) = 2), and the
sign of N_{e,h} is +(p+1) on every extraspecial pair (e, h).  Individual
signs are convention choices; every quantity the engine asserts downstream
(dimensions, ranks, magnitudes) is invariant under them.

The non-extraspecial special-pair constants come from the Jacobi identity
applied to (X_e, X_h, X_{-a}) for a+b = e+h = g with (e,h) extraspecial:

    N(e,h) N(g,-a) + N(h,-a) N(h-a, e) + N(-a,e) N(e-a, h) = 0

(absent terms when h-a or e-a is not a root), together with the reduction
of mixed-sign constants to positive pairs via the cyclic relation
N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y) for x+y+z = 0 and the negation
symmetry N(-x,-y) = N(x,y) (the sign-free form matching the [X_{-b}, X_b]
= +H_b normalization; both identities were cross-checked against an
explicit matrix realization).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsystem import Root, RootSystem, is_positive
from . import linalg


class AlgebraMismatchError(ValueError):
    """Raised when elements of different algebras are combined."""


def _neg(b: Root) -> Root:
    return tuple(-x for x in b)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


class LieAlgebra:
    """Semisimple Lie algebra over Q in a fixed Chevalley basis."""

    def __init__(self, root_system: RootSystem):
        rs = root_system
        self.root_system = rs
        self.rank_r = rs.rank
        self.dim_m = rs.rank + len(rs.roots)
        pos = sorted([b for b in rs.roots if is_positive(b)], key=lambda b: (sum(b), b))
        self.positive_roots = pos
        self.basis_roots: list[Root] = pos + [_neg(b) for b in pos]
        self.index_of_root = {b: rs.rank + k for k, b in enumerate(self.basis_roots)}
        self._order = {b: k for k, b in enumerate(pos)}
        self.coroot = {b: rs.coroot_coords(b) for b in rs.roots}
        self._n_pos: dict[tuple[Root, Root], int] = {}
        self._build_structure_constants()
        self._table = self._build_bracket_table()

    # -- structure constants --------------------------------------------------

    def _string_p(self, a: Root, b: Root) -> int:
        """Largest k with b - k a a root."""
        rs = self.root_system
        k = 0
        cur = _sub(b, a)
        while rs.is_root(cur):
            k += 1
            cur = _sub(cur, a)
        return k

    def _build_structure_constants(self):
        rs = self.root_system
        special: dict[Root, list[tuple[Root, Root]]] = {}
        for i, a in enumerate(self.positive_roots):
            for b in self.positive_roots[i + 1:]:
                s = _add(a, b)
                if rs.is_root(s):
                    special.setdefault(s, []).append((a, b))
        for g in sorted(special, key=lambda b: (sum(b), b)):
            pairs = sorted(special[g], key=lambda ab: self._order[ab[0]])
            e, h = pairs[0]
            self._n_pos[(e, h)] = self._string_p(e, h) + 1
            for a, b in pairs[1:]:
                val = self._derive_special(a, b, g, e, h)
                if val.denominator != 1:
                    raise AssertionError(f"non-integral constant for {a},{b}")
                n = int(val)
                if abs(n) != self._string_p(a, b) + 1:
                    raise AssertionError(f"|N| != p+1 for pair {a},{b}")
                self._n_pos[(a, b)] = n

    def _derive_special(self, a: Root, b: Root, g: Root, e: Root, h: Root) -> Fraction:
        rs = self.root_system
        t2 = Fraction(0)
        sig = _sub(h, a)
        if rs.is_root(sig):
            t2 = Fraction(self.n(h, _neg(a)) * self.n(sig, e))
        t3 = Fraction(0)
        tau = _sub(e, a)
        if rs.is_root(tau):
            t3 = Fraction(self.n(_neg(a), e) * self.n(tau, h))
        lg = Fraction(rs.length_sq(g))
        lb = Fraction(rs.length_sq(b))
        return -(t2 + t3) * lg / (lb * self._n_pos[(e, h)])

    def n(self, a: Root, b: Root) -> int:
        """Structure constant N_{a,b} for roots with a + b a root."""
        rs = self.root_system
        s = _add(a, b)
        if not rs.is_root(s):
            raise ValueError("sum of the pair is not a root")
        pa, pb = is_positive(a), is_positive(b)
        if pa and pb:
            if (a, b) in self._n_pos:
                return self._n_pos[(a, b)]
            return -self._n_pos[(b, a)]
        if not pa and not pb:
            # with [X_{-b}, X_b] = +H_b the negation symmetry carries no sign
            return self.n(_neg(a), _neg(b))
        c = _neg(s)
        val: Fraction
        if is_positive(b) == is_positive(c):
            val = Fraction(self.n(b, c) * rs.length_sq(c), rs.length_sq(a))
        else:
            val = Fraction(self.n(c, a) * rs.length_sq(c), rs.length_sq(b))
        if val.denominator != 1:
            raise AssertionError("non-integral mixed constant")
        return int(val)

    # -- bracket table ---------------------------------------------------------

    def _build_bracket_table(self):
        rs = self.root_system
        r = self.rank_r
        m = self.dim_m
        table: list[list[dict[int, int] | None]] = [[None] * m for _ in range(m)]
        for i in range(m):
            table[i][i] = {}
        for i in range(r):
            for j in range(r):
                table[i][j] = {}
        for i in range(r):
            for b in self.basis_roots:
                jb = self.index_of_root[b]
                v = rs.pairing(b, i)
                table[i][jb] = {jb: v} if v else {}
                table[jb][i] = {jb: -v} if v else {}
        for b in self.basis_roots:
            ib = self.index_of_root[b]
            for c in self.basis_roots:
                jc = self.index_of_root[c]
                if ib >= jc:
                    continue
                s = _add(b, c)
                if s == tuple([0] * r):
                    # [X_b, X_{-b}] = -H_b
                    ent = {k: -v for k, v in enumerate(self.coroot[b]) if v}
                elif rs.is_root(s):
                    ent = {self.index_of_root[s]: self.n(b, c)}
                else:
                    ent = {}
                table[ib][jc] = ent
                table[jc][ib] = {k: -v for k, v in ent.items()}
        return table

    # -- element constructors --------------------------------------------------

    def zero(self) -> "LieElement":
        return LieElement(self, {})

    def h(self, i: int) -> "LieElement":
        return LieElement(self, {i: Fraction(1)})

    def x(self, beta) -> "LieElement":
        beta = tuple(beta)
        return LieElement(self, {self.index_of_root[beta]: Fraction(1)})

    def coroot_element(self, beta) -> "LieElement":
        cc = self.coroot[tuple(beta)]
        return LieElement(self, {i: Fraction(v) for i, v in enumerate(cc) if v})

    def cartan_element(self, coords) -> "LieElement":
        return LieElement(self, {i: Fraction(c) for i, c in enumerate(coords) if c})

    def basis_element(self, k: int) -> "LieElement":
        return LieElement(self, {k: Fraction(1)})

    def basis(self) -> list["LieElement"]:
        return [self.basis_element(k) for k in range(self.dim_m)]

    def basis_label(self, k: int) -> str:
        if k < self.rank_r:
            return f"H{k + 1}"
        return "X" + str(self.basis_roots[k - self.rank_r])

    # -- operations --------------------------------------------------------------

    def bracket_indices(self, i: int, j: int) -> dict[int, int]:
        return self._table[i][j]

    def bracket(self, x: "LieElement", y: "LieElement") -> "LieElement":
        if x.alg is not self or y.alg is not self:
            raise AlgebraMismatchError("bracket of elements from different algebras")
        acc: dict[int, Fraction] = {}
        for i, ci in x.coeffs.items():
            for j, cj in y.coeffs.items():
                ent = self._table[i][j]
                if not ent:
                    continue
                s = ci * cj
                for k, v in ent.items():
                    acc[k] = acc.get(k, Fraction(0)) + s * v
        return LieElement(self, {k: v for k, v in acc.items() if v})

    def ad_matrix(self, x: "LieElement") -> list[list[Fraction]]:
        """Matrix of ad x: columns are [x, basis_j] in basis coordinates."""
        m = self.dim_m
        rows = [[Fraction(0)] * m for _ in range(m)]
        for j in range(m):
            img = self.bracket(x, self.basis_element(j))
            for k, v in img.coeffs.items():
                rows[k][j] = v
        return rows


@dataclass
class LieElement:
    """Sparse exact-rational vector over the Chevalley basis."""

    alg: LieAlgebra
    coeffs: dict[int, Fraction]

    def __post_init__(self):
        self.coeffs = {k: Fraction(v) for k, v in self.coeffs.items() if v != 0}

    def __add__(self, other: "LieElement") -> "LieElement":
        if other.alg is not self.alg:
            raise AlgebraMismatchError("sum of elements from different algebras")
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, Fraction(0)) + v
        return LieElement(self.alg, c)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (other * -1)

    def __mul__(self, scalar) -> "LieElement":
        s = Fraction(scalar)
        return LieElement(self.alg, {k: v * s for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "LieElement":
        return self * -1

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and other.alg is self.alg \
            and other.coeffs == self.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self) -> list[Fraction]:
        return [self.coeffs.get(k, Fraction(0)) for k in range(self.alg.dim_m)]

    def to_int_vector(self) -> list[int]:
        from math import lcm
        den = lcm(*(v.denominator for v in self.coeffs.values())) if self.coeffs else 1
        return [int(self.coeffs.get(k, Fraction(0)) * den) for k in range(self.alg.dim_m)]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            lbl = self.alg.basis_label(k)
            parts.append(lbl if c == 1 else f"{c}*{lbl}")
        return " + ".join(parts)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    return x.alg.bracket(x, y)


def build_lie_algebra(root_system: RootSystem) -> LieAlgebra:
    return LieAlgebra(root_system)


def ad_matrix(x: LieElement) -> list[list[Fraction]]:
    return x.alg.ad_matrix(x)


def sl2_triple_check(e: LieElement, f: LieElement, h: LieElement) -> bool:
    """Exact check of [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    alg = e.alg
    if f.alg is not alg or h.alg is not alg:
        raise AlgebraMismatchError("triple must live in one algebra")
    return (alg.bracket(h, e) == e * 2 and alg.bracket(h, f) == f * -2
            and alg.bracket(e, f) == h)


def exp_ad(n: LieElement, x: LieElement) -> LieElement:
    """exp(ad n) applied to x; exact, requires ad n nilpotent."""
    from math import factorial

    alg = n.alg
    term = x
    out = x
    k = 0
    while not term.is_zero():
        k += 1
        if k > 2 * alg.dim_m:
            raise ValueError("ad n does not look nilpotent")
        term = alg.bracket(n, term)
        out = out + term * Fraction(1, factorial(k))
    return out


def is_ad_nilpotent(x: LieElement, bound: int | None = None) -> bool:
    alg = x.alg
    if bound is None:
        bound = 2 * alg.dim_m + 1
    vecs = alg.basis()
    for _ in range(bound):
        vecs = [alg.bracket(x, v) for v in vecs]
        if all(v.is_zero() for v in vecs):
            return True
    return False
