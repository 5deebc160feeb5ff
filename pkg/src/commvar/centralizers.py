"""Centralizers, irregularity predicates, and the commutator-map rank identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .chevalley import LieAlgebra, LieElement


@dataclass
class Subspace:
    """A subspace of a Lie algebra carried by an explicit basis.

    The ambient algebra travels with the basis so centralizers inside a
    subalgebra are the same operation with a restricted ambient.
    """

    alg: LieAlgebra
    basis: list[LieElement]
    name: str = ""

    def __post_init__(self):
        rows = [b.to_vector() for b in self.basis]
        if rows and linalg.rank(rows) != len(rows):
            raise ValueError("subspace basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element_from_coords(self, coords) -> LieElement:
        out = self.alg.zero()
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b * c
        return out

    def coord_matrix(self) -> list[list[Fraction]]:
        return [b.to_vector() for b in self.basis]

    def contains(self, x: LieElement) -> bool:
        rows = [b.to_vector() for b in self.basis]
        target = x.to_vector()
        cols = [[rows[i][j] for i in range(len(rows))] for j in range(len(target))]
        return linalg.solve(cols, target) is not None

    def same_span(self, other: "Subspace") -> bool:
        if self.dim != other.dim:
            return False
        stacked = [b.to_vector() for b in self.basis] + [b.to_vector() for b in other.basis]
        return linalg.rank(stacked) == self.dim


def full_space(alg: LieAlgebra, name: str = "g") -> Subspace:
    return Subspace(alg, alg.basis(), name=name)


def cartan_subspace(alg: LieAlgebra) -> Subspace:
    return Subspace(alg, [alg.h(i) for i in range(alg.rank_r)], name="t")


def centralizer(ambient: Subspace | LieAlgebra, x: LieElement) -> Subspace:
    """{y in ambient : [x, y] = 0} as the kernel of ad x restricted to ambient."""
    if isinstance(ambient, LieAlgebra):
        ambient = full_space(ambient)
    alg = ambient.alg
    if x.alg is not alg:
        raise ValueError("element does not live in the ambient algebra")
    cols = [alg.bracket(x, b).to_vector() for b in ambient.basis]
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(alg.dim_m)]
    ker = linalg.kernel_basis(rows)
    basis = [ambient.element_from_coords(v) for v in ker]
    return Subspace(alg, basis, name=f"centralizer in {ambient.name or 'subspace'}")


def centralizer_dim(ambient: Subspace | LieAlgebra, x: LieElement) -> int:
    """dim of the centralizer, via an exact rank (no basis extraction)."""
    if isinstance(ambient, LieAlgebra):
        ambient = full_space(ambient)
    alg = ambient.alg
    cols = [alg.bracket(x, b).to_int_vector() for b in ambient.basis]
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(alg.dim_m)]
    return ambient.dim - linalg.rank(rows)


def is_irregular(alg: LieAlgebra, z: LieElement) -> bool:
    """dim g_z > rk g; the irregular locus of the algebra itself."""
    return centralizer_dim(alg, z) > alg.rank_r


def mu_rank_identity(a: LieElement, b: LieElement) -> tuple[int, int]:
    """Rank data of the commutator-map differential at the pair (a, b).

    Returns (rank of (x,y) |-> [x,b] + [a,y], dim(g_a meet g_b)) and checks
    the two rank identities relating them: the differential has rank
    m - dim(g_a meet g_b), and [g,a] + [g,b] has that same dimension.
    """
    alg = a.alg
    if b.alg is not alg:
        raise ValueError("pair must live in one algebra")
    m = alg.dim_m
    ad_a = alg.ad_matrix(a)
    ad_b = alg.ad_matrix(b)
    # d mu (x,y) = [x,b] + [a,y] = -ad(b) x + ad(a) y
    dmu = [[-ad_b[i][j] for j in range(m)] + list(ad_a[i]) for i in range(m)]
    rank_dmu = linalg.rank(dmu)
    stacked = [list(ad_a[i]) for i in range(m)] + [list(ad_b[i]) for i in range(m)]
    joint = m - linalg.rank(stacked)
    if rank_dmu != m - joint:
        raise AssertionError("differential rank identity violated")
    image_sum = [list(ad_a[i]) + list(ad_b[i]) for i in range(m)]
    if linalg.rank(image_sum) != m - joint:
        raise AssertionError("image-sum rank identity violated")
    return rank_dmu, joint


def orbit_closure_dim(c: Subspace) -> int:
    """dim of the saturation closure of a subspace c of the Cartan subalgebra.

    Equals dim c plus the number of roots not vanishing identically on c.
    """
    alg = c.alg
    rs = alg.root_system
    r = alg.rank_r
    for v in c.basis:
        if any(k >= r for k in v.coeffs):
            raise ValueError("subspace must lie in the Cartan subalgebra")
    nonvanishing = 0
    for beta in rs.roots:
        for v in c.basis:
            val = sum(v.coeffs.get(i, Fraction(0)) * rs.pairing(beta, i) for i in range(r))
            if val != 0:
                nonvanishing += 1
                break
    return c.dim + nonvanishing


def kernel_of_root(alg: LieAlgebra, beta) -> Subspace:
    """Ker(beta) inside the Cartan subalgebra."""
    rs = alg.root_system
    r = alg.rank_r
    rows = [[Fraction(rs.pairing(tuple(beta), i)) for i in range(r)]]
    ker = linalg.kernel_basis(rows)
    return Subspace(alg, [alg.cartan_element(v) for v in ker], name=f"Ker {tuple(beta)}")
