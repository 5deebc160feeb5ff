"""Root systems of the simple types, stored exactly in simple-root coordinates.

Roots are integer coefficient vectors over the simple roots (Bourbaki
numbering).  The Cartan matrix convention is A[i][j] = alpha_i(H_alpha_j),
i.e. column j pairs against the j-th simple coroot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

Root = tuple[int, ...]

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}

_ROOT_COUNT = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
    "E": lambda r: {6: 72, 7: 126, 8: 240}[r],
    "F": lambda r: 48,
    "G": lambda r: 12,
}


class InvalidTypeError(ValueError):
    """Raised for a (type, rank) pair outside the simple classification."""


def cartan_matrix(label: str, rank: int) -> list[list[int]]:
    """Cartan matrix of a simple type, A[i][j] = alpha_i(H_alpha_j)."""
    if label not in _VALID_RANKS:
        raise InvalidTypeError(f"unknown type label {label!r}; expected one of A..G")
    if not _VALID_RANKS[label](rank):
        raise InvalidTypeError(f"rank {rank} is not admissible for type {label} "
                               f"(A: r>=1, B/C: r>=2, D: r>=3, E: 6..8, F: 4, G: 2)")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, vij=-1, vji=-1):
        a[i][j] = vij
        a[j][i] = vji

    if label in ("A", "B", "C"):
        for i in range(rank - 1):
            edge(i, i + 1)
        if label == "B" and rank >= 2:
            a[rank - 2][rank - 1] = -2      # alpha_r short
        if label == "C" and rank >= 2:
            a[rank - 1][rank - 2] = -2      # alpha_r long
    elif label == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif label == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            edge(i, j)
        for i in range(5, rank - 1):
            edge(i, i + 1)
    elif label == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)                  # alpha_1, alpha_2 long
        edge(2, 3)
    elif label == "G":
        edge(0, 1, -1, -3)                  # alpha_1 short
    return a


def _symmetrizer(cartan: list[list[int]]) -> list[int]:
    """Positive integers d with d[j]*A[i][j] symmetric; short roots get d = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    # d_i A_ji = d_j A_ij
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    stack.append(j)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    vals = [int(x * lcm) for x in d]
    g = 0
    for v in vals:
        g = _gcd(g, v)
    return [v // g for v in vals]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class RootSystem:
    """A (possibly reducible) finite root system with exact integer data."""

    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    factors: tuple[tuple[str, tuple[int, ...]], ...]   # (label, node indices)
    lacety: int
    symmetrizer: tuple[int, ...]
    requested_label: str | None = None
    _root_index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._root_index.update({b: k for k, b in enumerate(self.roots)})

    @property
    def simple_roots(self) -> list[Root]:
        n = self.rank
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    @property
    def positive_roots(self) -> list[Root]:
        return [b for b in self.roots if is_positive(b)]

    def is_root(self, v: Root) -> bool:
        return v in self._root_index

    def pairing(self, beta: Root, i: int) -> int:
        """beta(H_alpha_i), the value of beta on the i-th simple coroot."""
        return sum(beta[j] * self.cartan[j][i] for j in range(self.rank))

    def reflect(self, beta: Root, i: int) -> Root:
        p = self.pairing(beta, i)
        return tuple(beta[j] - p * (1 if j == i else 0) for j in range(self.rank))

    def length_sq(self, beta: Root) -> int:
        """Squared length under the W-invariant form with short roots at 2."""
        n = self.rank
        total = 0
        for i in range(n):
            if beta[i] == 0:
                continue
            for j in range(n):
                if beta[j]:
                    total += beta[i] * beta[j] * self.symmetrizer[j] * self.cartan[i][j]
        return total

    def coroot_coords(self, gamma: Root) -> tuple[int, ...]:
        """H_gamma as an integer combination of the simple coroots."""
        lsq = self.length_sq(gamma)
        out = []
        for i in range(self.rank):
            c = Fraction(2 * gamma[i] * self.symmetrizer[i], lsq)
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral coroot coordinate for {gamma}")
            out.append(int(c))
        return tuple(out)

    def root_on_coroot(self, beta: Root, gamma: Root) -> int:
        """beta(H_gamma) for arbitrary roots beta, gamma."""
        cc = self.coroot_coords(gamma)
        return sum(cc[i] * self.pairing(beta, i) for i in range(self.rank))

    def height(self, beta: Root) -> int:
        return sum(beta)


def is_positive(beta: Root) -> bool:
    return any(x > 0 for x in beta)


def _close_under_reflections(rank: int, rs_pairing) -> set[Root]:
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simple) | {tuple(-x for x in b) for b in simple}
    frontier = set(roots)
    while frontier:
        new = set()
        for b in frontier:
            for i in range(rank):
                p = rs_pairing(b, i)
                r = tuple(b[j] - p * (1 if j == i else 0) for j in range(rank))
                if r not in roots:
                    new.add(r)
        roots |= new
        frontier = new
    return roots


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct a simple root system; C2 is normalized to B2 (so5 = sp4)."""
    requested = None
    if type_label == "C" and rank == 2:
        requested, type_label = "C2", "B"
    a = cartan_matrix(type_label, rank)
    pairing = lambda b, i: sum(b[j] * a[j][i] for j in range(rank))
    roots = _close_under_reflections(rank, pairing)
    expected = _ROOT_COUNT[type_label](rank)
    if len(roots) != expected:
        raise AssertionError(f"{type_label}{rank}: generated {len(roots)} roots, "
                             f"expected {expected}")
    lacety = max((-a[i][j] for i in range(rank) for j in range(rank) if i != j),
                 default=1)
    ordered = tuple(sorted(roots, key=lambda b: (sum(b), b)))
    return RootSystem(
        type_label=type_label,
        rank=rank,
        cartan=tuple(tuple(row) for row in a),
        roots=ordered,
        factors=((type_label + str(rank), tuple(range(rank))),),
        lacety=lacety,
        symmetrizer=tuple(_symmetrizer(a)),
        requested_label=requested,
    )


def direct_sum(*systems: RootSystem) -> RootSystem:
    """Orthogonal direct sum; roots of each factor are padded with zeros."""
    rank = sum(s.rank for s in systems)
    cartan = [[0] * rank for _ in range(rank)]
    roots: list[Root] = []
    factors: list[tuple[str, tuple[int, ...]]] = []
    d: list[int] = []
    off = 0
    for s in systems:
        for i in range(s.rank):
            for j in range(s.rank):
                cartan[off + i][off + j] = s.cartan[i][j]
        for b in s.roots:
            roots.append(tuple([0] * off + list(b) + [0] * (rank - off - s.rank)))
        for lbl, nodes in s.factors:
            factors.append((lbl, tuple(off + k for k in nodes)))
        d.extend(s.symmetrizer)
        off += s.rank
    label = "+".join(s.type_label + str(s.rank) for s in systems)
    return RootSystem(
        type_label=label,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        roots=tuple(sorted(roots, key=lambda b: (sum(b), b))),
        factors=tuple(factors),
        lacety=max(s.lacety for s in systems),
        symmetrizer=tuple(d),
    )


def root_length_classes(rs: RootSystem) -> int:
    """Number of Weyl-group orbits on the roots of a simple system.

    For an irreducible system the W-orbits are exactly the length classes,
    so distinct squared lengths count them.
    """
    if len(rs.factors) != 1:
        raise ValueError("length-class count is defined per simple factor")
    return len({rs.length_sq(b) for b in rs.roots})


def weyl_orbit_count(rs: RootSystem) -> int:
    """Brute-force count of W-orbits on the roots (closure under reflections)."""
    remaining = set(rs.roots)
    orbits = 0
    while remaining:
        seed = next(iter(remaining))
        orbit = {seed}
        frontier = [seed]
        while frontier:
            b = frontier.pop()
            for i in range(rs.rank):
                r = rs.reflect(b, i)
                if r not in orbit:
                    orbit.add(r)
                    frontier.append(r)
        remaining -= orbit
        orbits += 1
    return orbits


def _components(nodes: list[int], adj) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for v in nodes:
                if v not in seen and adj(u, v):
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def classify_subdiagram(rs: RootSystem, nodes: list[int]) -> tuple[str, int, tuple[int, ...]]:
    """Identify the simple type of one connected Dynkin subdiagram.

    Returns (label, rank, nodes reordered to the Bourbaki numbering of that
    type).  C2 is reported as B2 and D3 as A3 (canonical representatives).
    """
    k = len(nodes)
    sub = [[rs.cartan[i][j] for j in nodes] for i in nodes]
    candidates = ["A"]
    if k >= 2:
        candidates += ["B", "C", "G"] if k == 2 else ["B", "C"]
    if k >= 4:
        candidates.append("D")
    if k in (6, 7, 8):
        candidates.append("E")
    if k == 4:
        candidates.append("F")
    for label in candidates:
        try:
            target = cartan_matrix(label, k)
        except InvalidTypeError:
            continue
        row_sig = sorted(sorted(row) for row in target)
        if sorted(sorted(row) for row in sub) != row_sig:
            continue
        for perm in permutations(range(k)):
            if all(sub[perm[i]][perm[j]] == target[i][j] for i in range(k) for j in range(k)):
                ordered = tuple(nodes[perm[i]] for i in range(k))
                if label == "C" and k == 2:
                    # report as B2 with the long root first
                    return "B", 2, (ordered[1], ordered[0])
                if label == "D" and k == 3:
                    return "A", 3, ordered
                return label, k, ordered
    raise AssertionError(f"subdiagram on nodes {nodes} matched no simple type")


def subsystem(rs: RootSystem, I) -> tuple[list[Root], list[Root], list[tuple[str, int, tuple[int, ...]]]]:
    """Roots supported on the simple-root subset I, with factor classification.

    Returns (Phi(I), Phi(I)^+, factors) where each factor is
    (label, rank, ordered node indices).
    """
    I = sorted(set(I))
    support_ok = lambda b: all(b[j] == 0 for j in range(rs.rank) if j not in I)
    phi = [b for b in rs.roots if support_ok(b)]
    phi_plus = [b for b in phi if is_positive(b)]
    adj = lambda u, v: rs.cartan[u][v] != 0
    factors = [classify_subdiagram(rs, comp) for comp in _components(I, adj)]
    return phi, phi_plus, factors
