"""Decomposition-class bookkeeping and the codimension decision procedure.

Classes are parametrized by a subset I of the simple roots and a nilpotent
orbit of the Levi factor s(I).  The subset only enters through the
isomorphism type of its Dynkin subdiagram, so classes are deduplicated by
that signature and the per-class invariants are computed once on a
standalone algebra of the same type.

The procedure: codim 2 iff some class with |I| <= 2 has c(I,x) = 2;
otherwise codim 3 iff some class with |I| <= 3 has c = 3; otherwise 4.
c = |I| + codim of the irregular set in s(I)_x, so c = 2 forces |I| = 2
with codim 0 (an exact whole-space point-count test), and at |I| = 3 a
c of 3 is excluded by certifying codim >= 1 with the weighted-diagonal
witness (all factors there are type A).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .rootsystem import RootSystem, build_root_system, direct_sum, subsystem
from .chevalley import LieAlgebra, LieElement, build_lie_algebra
from .centralizers import Subspace, centralizer, centralizer_dim, kernel_of_root, orbit_closure_dim
from .nilpotents import NilpotentRep, UnsupportedLeviError, aaa_h_element, direct_sum_reps
from .irrlocus import exact_point_count, irregular_locus_dim, generic_centralizer_dim, PRIMES, PRIMES_FAST


@dataclass
class DecompClassDescriptor:
    """One decomposition class D(I, x) with its derived dimensions."""

    I: tuple[int, ...]
    rep: NilpotentRep
    dim_tI: int
    dim_sIx: int
    dim_class: int
    irregular: bool
    c_value: int | None          # None when the class is regular ("not applicable")


@dataclass
class ClassLedgerEntry:
    """Per-class line of the decision-procedure ledger."""

    subset: tuple[int, ...]
    signature: tuple[str, ...]
    rep_label: str
    dim_sIx: int
    c_value: int | None          # exact value when known
    c_lower_bound: int
    method: str

    def as_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "signature": list(self.signature),
            "rep": self.rep_label,
            "dim_sIx": self.dim_sIx,
            "c": self.c_value,
            "c_lower_bound": self.c_lower_bound,
            "method": self.method,
        }


def levi_data(g: LieAlgebra, I) -> tuple[Subspace, Subspace]:
    """(t(I), s(I)) for a subset I of the simple roots.

    t(I) is the joint kernel of the roots in I inside the Cartan
    subalgebra; s(I) is spanned by the coroots of I and the root vectors
    supported on I.  Checks dim t(I) = r - |I| and g(I) = t(I) + s(I)
    exactly.
    """
    rs = g.root_system
    I = tuple(sorted(set(I)))
    r = g.rank_r
    rows = [[rs.pairing(tuple(1 if j == i else 0 for j in range(r)), k) for k in range(r)]
            for i in I]
    ker = linalg.kernel_basis(rows) if rows else [[1 if j == i else 0 for j in range(r)]
                                                  for i in range(r)]
    tI = Subspace(g, [g.cartan_element(v) for v in ker], name=f"t({I})")
    if tI.dim != r - len(I):
        raise AssertionError("dim t(I) must be r - |I|")
    phi, _, _ = subsystem(rs, I)
    basis = [g.coroot_element(tuple(1 if j == i else 0 for j in range(r))) for i in I]
    basis += [g.x(b) for b in phi]
    sI = Subspace(g, basis, name=f"s({I})")
    stacked = [v.to_vector() for v in tI.basis] + [v.to_vector() for v in sI.basis]
    if linalg.rank(stacked) != tI.dim + sI.dim:
        raise AssertionError("g(I) must split as t(I) + s(I)")
    return tI, sI


def class_descriptor(g: LieAlgebra, I, rep: NilpotentRep) -> DecompClassDescriptor:
    """Exact dimensions of the class D(I, x) for a representative x in s(I)."""
    I = tuple(sorted(set(I)))
    tI, sI = levi_data(g, I)
    dim_sIx = centralizer_dim(sI, rep.element)
    irregular = dim_sIx > len(I)
    c = None
    if irregular:
        c = c_value(g, I, rep)
    return DecompClassDescriptor(
        I=I, rep=rep, dim_tI=tI.dim, dim_sIx=dim_sIx,
        dim_class=g.dim_m - dim_sIx, irregular=irregular, c_value=c,
    )


# -- intrinsic per-signature computation (cached on standalone algebras) ------

_signature_cache: dict = {}


def standalone_algebra(signature: tuple[str, ...]) -> LieAlgebra:
    systems = [build_root_system(lbl[0], int(lbl[1:])) for lbl in signature]
    rs = systems[0] if len(systems) == 1 else direct_sum(*systems)
    return build_lie_algebra(rs)


def zero_rep_codim(s: LieAlgebra) -> int:
    """codim of the irregular locus of a semisimple algebra itself.

    Components of the irregular locus are the closures of the classes
    D(alpha, 0); their dimension comes from the orbit-closure formula, so
    the codim is dim s minus the largest component dimension.
    """
    best = None
    for i in range(s.rank_r):
        alpha = tuple(1 if j == i else 0 for j in range(s.rank_r))
        d = orbit_closure_dim(kernel_of_root(s, alpha))
        best = d if best is None else max(best, d)
    return s.dim_m - best


def _parse_factors(rs: RootSystem) -> list[tuple[str, int, tuple[int, ...]]]:
    return [(lbl[0], int(lbl[1:]), nodes) for lbl, nodes in rs.factors]


def rep_key(signature: tuple[str, ...], label: str) -> tuple[str, ...]:
    """Order-independent key identifying a rep within its Levi type."""
    parts = label.split("+") if label != "0" else ["0"] * len(signature)
    return tuple(sorted(f"{f}:{p}" for f, p in zip(signature, parts)))


def signature_class_entries(signature: tuple[str, ...], fast: bool = False,
                            workers: int | None = None) -> tuple[list[ClassLedgerEntry], bool]:
    """Ledger entries for every irregular nilpotent class of one Levi type.

    Returns (entries, complete) where complete records whether the orbit
    lists covered every nilpotent orbit of the factors.
    """
    key = (signature, fast)
    if key in _signature_cache:
        return _signature_cache[key]
    s = standalone_algebra(signature)
    factors = _parse_factors(s.root_system)
    size = s.rank_r
    reps = direct_sum_reps(s, factors)
    complete = all(rep.complete_list for rep in reps)
    entries: list[ClassLedgerEntry] = []
    for rep in reps:
        dim_sx = centralizer_dim(s, rep.element)
        if dim_sx <= size:
            continue                       # regular in s(I): not an irregular class
        if rep.element.is_zero():
            codim = zero_rep_codim(s)
            entries.append(ClassLedgerEntry(
                subset=(), signature=signature, rep_label="0", dim_sIx=dim_sx,
                c_value=size + codim, c_lower_bound=size + codim,
                method="component-formula"))
            continue
        if dim_sx <= 6:
            est = irregular_locus_dim(s, rep.element, fast=fast, workers=workers)
            if not est.conclusive:
                raise ArithmeticError(
                    f"inconclusive slope for {signature} rep {rep.label}: {est.notes}")
            codim = dim_sx - est.dim
            entries.append(ClassLedgerEntry(
                subset=(), signature=signature, rep_label=rep.label, dim_sIx=dim_sx,
                c_value=size + codim, c_lower_bound=size + codim,
                method=est.method))
            continue
        # large centralizer: certify codim >= 1 with the weighted-diagonal
        # witness h per type-A factor (all factors are type A when this
        # branch is reached by the decision procedure)
        if any(lbl != "A" for lbl, _, _ in factors):
            raise UnsupportedLeviError(
                f"cannot bound the class {signature} rep {rep.label}: "
                f"centralizer dim {dim_sx} is over the counting budget and a "
                "witness construction exists only for type-A factors")
        h = s.zero()
        for off, (lbl, rank, nodes) in enumerate(factors):
            part = _label_to_partition(rep.label.split("+")[off])
            h = h + aaa_h_element(s, nodes, part)
        sx = centralizer(s, rep.element)
        dim_sxh = centralizer_dim(sx, h)
        if dim_sxh != size:
            raise AssertionError("witness h must be regular in the centralizer")
        sampled = generic_centralizer_dim(s, rep.element)
        if sampled != size:
            raise AssertionError("sampled generic centralizer dim disagrees with witness")
        entries.append(ClassLedgerEntry(
            subset=(), signature=signature, rep_label=rep.label, dim_sIx=dim_sx,
            c_value=None, c_lower_bound=size + 1, method="aaa-witness"))
    _signature_cache[key] = (entries, complete)
    return entries, complete


def _label_to_partition(label: str) -> tuple[int, ...]:
    return tuple(int(x) for x in label.strip("[]").split(","))


def c_value(g: LieAlgebra, I, rep: NilpotentRep) -> int:
    """c(I, x) = codim of the irregular set in s(I)_x plus |I|; intrinsic to s(I)."""
    I = tuple(sorted(set(I)))
    _, _, factors = subsystem(g.root_system, I)
    signature = tuple(sorted(f"{lbl}{rk}" for lbl, rk, _ in factors))
    wanted = rep_key(rep.factor_signature, rep.label) if not rep.element.is_zero() else None
    entries, _ = signature_class_entries(signature)
    for entry in entries:
        if rep.element.is_zero():
            if entry.rep_label == "0":
                return entry.c_value
            continue
        if entry.rep_label == "0":
            continue
        if rep_key(entry.signature, entry.rep_label) == wanted:
            if entry.c_value is None:
                raise ArithmeticError("c-value only bounded, not exact, for this class")
            return entry.c_value
    raise ValueError(f"representative {rep.label} not found among the classes of {signature}")


# -- the decision procedure ----------------------------------------------------


def enumerate_subset_signatures(rs: RootSystem, max_size: int = 3):
    """Subsets of the simple roots up to subdiagram isomorphism.

    Returns {signature: representative subset} maps per size.
    """
    by_size: dict[int, dict[tuple[str, ...], tuple[int, ...]]] = {}
    for size in range(1, max_size + 1):
        sigs: dict[tuple[str, ...], tuple[int, ...]] = {}
        for I in combinations(range(rs.rank), size):
            _, _, factors = subsystem(rs, I)
            sig = tuple(sorted(f"{lbl}{rk}" for lbl, rk, _ in factors))
            sigs.setdefault(sig, I)
        by_size[size] = sigs
    return by_size


def commvar_irr_codim(g: LieAlgebra, fast: bool = False,
                      workers: int | None = None) -> tuple[int, list[ClassLedgerEntry]]:
    """codim of the irregular locus of the commuting variety, with a ledger.

    Follows the three-step case split over decomposition classes with
    1 <= |I| <= 3; the answer is 5 minus the lacety for every simple type.
    """
    rs = g.root_system
    by_size = enumerate_subset_signatures(rs, max_size=3)
    ledger: list[ClassLedgerEntry] = []
    incomplete = False

    small_entries: list[ClassLedgerEntry] = []
    for size in (1, 2):
        for sig, subset in by_size.get(size, {}).items():
            entries, complete = signature_class_entries(sig, fast=fast, workers=workers)
            incomplete = incomplete or not complete
            for e in entries:
                entry = ClassLedgerEntry(subset=subset, signature=e.signature,
                                         rep_label=e.rep_label, dim_sIx=e.dim_sIx,
                                         c_value=e.c_value,
                                         c_lower_bound=e.c_lower_bound, method=e.method)
                small_entries.append(entry)
    ledger.extend(small_entries)

    if any(e.c_value == 2 for e in small_entries):
        return 2, ledger
    if incomplete:
        raise UnsupportedLeviError(
            "cannot rule out codim 2: some Levi factor has an incomplete orbit list")
    if any(e.c_value == 3 for e in small_entries):
        return 3, ledger

    for sig, subset in by_size.get(3, {}).items():
        entries, complete = signature_class_entries(sig, fast=fast, workers=workers)
        if not complete:
            raise UnsupportedLeviError(f"incomplete orbit list for size-3 Levi {sig}")
        for e in entries:
            entry = ClassLedgerEntry(subset=subset, signature=e.signature,
                                     rep_label=e.rep_label, dim_sIx=e.dim_sIx,
                                     c_value=e.c_value, c_lower_bound=e.c_lower_bound,
                                     method=e.method)
            ledger.append(entry)
            if entry.c_value == 3:
                return 3, ledger
            if entry.c_value is None and entry.c_lower_bound <= 3:
                raise ArithmeticError("size-3 class not excluded from c = 3")
    if any(e.c_value == 3 for e in ledger):
        return 3, ledger
    return 4, ledger


def reductive_min(simple_ideals: list[tuple[str, int]], center_dim: int = 0,
                  fast: bool = False) -> int:
    """codim for a reductive algebra: the minimum over its simple ideals."""
    if not simple_ideals:
        raise ValueError("a commutative algebra has no irregular locus to measure")
    if center_dim < 0:
        raise ValueError("center dimension cannot be negative")
    best = None
    for lbl, rank in simple_ideals:
        g = build_lie_algebra(build_root_system(lbl, rank))
        codim, _ = commvar_irr_codim(g, fast=fast)
        best = codim if best is None else min(best, codim)
    return best
