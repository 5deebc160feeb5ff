"""Labeled nilpotent-orbit representatives for the Levi factors the
decision procedure needs: all of type A (partitions), the four orbits of
so5, and the subregular orbit of G2.

Type-A representatives place each Jordan block on consecutive simple
roots, so diag(J_{d1}, J_{d2}, ...) becomes a sum of simple root vectors
with gaps between blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chevalley import LieAlgebra, LieElement


class UnsupportedLeviError(ValueError):
    """A Levi factor type without an implemented orbit list."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be non-increasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def centralizer_dim_gl(self) -> int:
        """dim of the centralizer in gl_n: sum (2i-1) d_i."""
        return sum((2 * i + 1) * d for i, d in enumerate(self.parts))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for d in range(min(remaining, maxpart), 0, -1):
            rec(remaining - d, d, acc + [d])
    rec(n, n, [])
    return tuple(out)


@dataclass
class NilpotentRep:
    """A nilpotent representative together with its orbit label."""

    label: str
    element: LieElement
    factor_signature: tuple[str, ...]
    complete_list: bool = True


def type_a_rep(alg: LieAlgebra, nodes: tuple[int, ...], parts: tuple[int, ...]) -> LieElement:
    """Jordan-type representative in an A-chain factor.

    nodes are the factor's simple roots in chain order (length n-1 for
    sl_n); blocks of the partition occupy consecutive chain positions.
    """
    n = len(nodes) + 1
    part = Partition(tuple(parts))
    if part.n != n:
        raise ValueError(f"partition {parts} is not a partition of {n}")
    rs = alg.root_system
    out = alg.zero()
    offset = 0
    for d in part.parts:
        for k in range(offset, offset + d - 1):
            node = nodes[k]
            beta = tuple(1 if j == node else 0 for j in range(rs.rank))
            out = out + alg.x(beta)
        offset += d
    return out


def _simple_root(alg: LieAlgebra, node: int):
    return tuple(1 if j == node else 0 for j in range(alg.root_system.rank))


def factor_reps(alg: LieAlgebra, label: str, rank: int,
                nodes: tuple[int, ...]) -> tuple[list[tuple[str, LieElement]], bool]:
    """All nilpotent-orbit representatives of one simple factor.

    Returns (list of (label, element), complete) where complete records
    whether the list meets every orbit of the factor.
    """
    if label == "A":
        reps = [("[" + ",".join(map(str, p)) + "]", type_a_rep(alg, nodes, p))
                for p in partitions(rank + 1)]
        return reps, True
    if label == "B" and rank == 2:
        long_node, short_node = nodes
        xl = alg.x(_simple_root(alg, long_node))
        xs = alg.x(_simple_root(alg, short_node))
        return [("0", alg.zero()), ("min", xl), ("subreg", xs), ("reg", xl + xs)], True
    if label == "G":
        a1, a2 = nodes
        rs = alg.root_system
        beta = tuple((3 if j == a1 else 0) + (1 if j == a2 else 0) for j in range(rs.rank))
        e = alg.x(_simple_root(alg, a2)) + alg.x(beta)
        return [("0", alg.zero()), ("subreg", e)], False
    raise UnsupportedLeviError(f"no orbit list for Levi factor {label}{rank}")


def direct_sum_reps(alg: LieAlgebra,
                    factors: list[tuple[str, int, tuple[int, ...]]]) -> list[NilpotentRep]:
    """Cartesian product of per-factor representative lists."""
    combos: list[tuple[str, LieElement]] = [("", alg.zero())]
    complete = True
    signature = tuple(f"{lbl}{rk}" for lbl, rk, _ in factors)
    for label, rank, nodes in factors:
        reps, comp = factor_reps(alg, label, rank, nodes)
        complete = complete and comp
        combos = [(f"{l1}+{l2}" if l1 else l2, e1 + e2) for l1, e1 in combos
                  for l2, e2 in reps]
    return [NilpotentRep(lbl, el, signature, complete) for lbl, el in combos]


def lemma_aaa_h(parts) -> tuple[int, ...]:
    """Strictly decreasing integers a with sum d_i a_i = 0.

    Deterministic: start from a_i = s+1-2i, shift to zero the weighted sum
    over the rationals, clear denominators, reduce by the gcd.
    """
    part = Partition(tuple(parts))
    s = len(part.parts)
    if s < 2:
        raise ValueError("need at least two parts (otherwise take h = 0)")
    base = [Fraction(s + 1 - 2 * (i + 1)) for i in range(s)]
    total = sum(Fraction(d) * a for d, a in zip(part.parts, base))
    shift = total / part.n
    vals = [a - shift for a in base]
    from math import gcd, lcm
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    if not all(x > y for x, y in zip(ints, ints[1:])):
        raise AssertionError("weights must be strictly decreasing")
    if sum(d * a for d, a in zip(part.parts, ints)) != 0:
        raise AssertionError("weighted sum must vanish")
    return tuple(ints)


def aaa_h_element(alg: LieAlgebra, nodes: tuple[int, ...], parts) -> LieElement:
    """The diagonal element diag(a_1 I_{d1}, ...) as a coroot combination.

    For an A-chain on the given nodes, diag(c_1..c_n) corresponds to
    sum_k (c_1+...+c_k) H_{node_k}.
    """
    part = Partition(tuple(parts))
    if len(part.parts) == 1:
        return alg.zero()
    weights = lemma_aaa_h(parts)
    diag: list[int] = []
    for a, d in zip(weights, part.parts):
        diag.extend([a] * d)
    out = alg.zero()
    acc = 0
    for k, node in enumerate(nodes):
        acc += diag[k]
        if acc:
            out = out + alg.coroot_element(_simple_root(alg, node)) * acc
    return out
