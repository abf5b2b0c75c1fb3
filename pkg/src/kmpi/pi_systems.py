"""Pi-system predicate, bounded enumeration and derived Cartan matrices.

A pi-system is a set of roots no pairwise difference of which is a root.  Two
flavours are supported:

* ``standard`` mode: every element is a real root (either sign);
* ``extended`` mode: every element is a positive root, imaginary allowed.

Enumeration works over the index window ``{beta_i^j : j <= max_index}`` of
positive real roots (optionally with negatives) and is a straight power-set
filter, so it doubles as its own brute-force oracle.  For a standard-mode
pi-system the matrix of Cartan pairings is a generalized Cartan matrix; it is
computed in the canonical element order (family, index, sign).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .root_core import (
    GCM2,
    RootClass,
    RootIndex,
    RootVec,
    classify_root,
    pairing,
    positive_real_root,
)

STANDARD = "standard"
EXTENDED = "extended"


class PiSystemContractError(ValueError):
    """A system violates its mode's membership contract (distinct from failing
    the pi-system property)."""


@dataclass(frozen=True)
class SignedRoot:
    """A root vector, optionally tagged with its (family, index, sign) origin."""

    vec: RootVec
    index: RootIndex | None = None
    sign: int = 1


def signed_root(g: GCM2, family: int, j: int, sign: int = 1) -> SignedRoot:
    """Build ``sign * beta_family^j`` with provenance attached."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    v = positive_real_root(g, family, j)
    return SignedRoot(v if sign == 1 else -v, RootIndex(family, j), sign)


def _canonical_key(sr: SignedRoot) -> tuple:
    if sr.index is not None:
        return (0, sr.index.family, sr.index.j, 0 if sr.sign == 1 else 1)
    return (1, sr.vec.x, sr.vec.y)


@dataclass(frozen=True)
class PiSystem:
    """Ordered tuple of signed roots, candidate for the pi-system property."""

    elements: tuple[SignedRoot, ...]
    mode: str = STANDARD


def pi_system(elements, mode: str = STANDARD) -> PiSystem:
    """Build a PiSystem with elements in canonical order."""
    if mode not in (STANDARD, EXTENDED):
        raise ValueError(f"unknown mode {mode!r}")
    elems = tuple(sorted(elements, key=_canonical_key))
    return PiSystem(elems, mode)


def from_vectors(vectors, mode: str = STANDARD) -> PiSystem:
    return pi_system([SignedRoot(v) for v in vectors], mode)


def from_triples(g: GCM2, triples, mode: str = STANDARD) -> PiSystem:
    """Build a system from (family, index, sign) triples."""
    return pi_system([signed_root(g, f, j, s) for f, j, s in triples], mode)


def validate_elements(g: GCM2, s: PiSystem) -> None:
    """Check the mode contract: raises PiSystemContractError on violation."""
    seen = set()
    for el in s.elements:
        if el.vec in seen:
            raise PiSystemContractError(f"duplicate vector {el.vec}")
        seen.add(el.vec)
        cls = classify_root(g, el.vec)
        if s.mode == STANDARD:
            if not cls.is_real:
                raise PiSystemContractError(
                    f"standard-mode element {el.vec} classifies {cls.value}, not real"
                )
        else:
            if not (cls.is_root and cls.is_positive):
                raise PiSystemContractError(
                    f"extended-mode element {el.vec} classifies {cls.value}, "
                    "not a positive root"
                )
        if el.index is not None:
            expected = positive_real_root(g, el.index.family, el.index.j)
            if el.vec != (expected if el.sign == 1 else -expected):
                raise PiSystemContractError(
                    f"provenance mismatch: {el.vec} is not "
                    f"{'+' if el.sign == 1 else '-'}beta_{el.index.family}^{el.index.j}"
                )


@dataclass(frozen=True)
class Violation:
    """A pair whose difference is a root, witnessing pi-system failure."""

    alpha: SignedRoot
    beta: SignedRoot
    difference: RootVec
    difference_class: RootClass


def is_pi_system(g: GCM2, s: PiSystem) -> tuple[bool, Violation | None]:
    """Decide the pi-system property; on failure return the first violating
    ordered pair in canonical element order."""
    validate_elements(g, s)
    elems = sorted(s.elements, key=_canonical_key)
    for u in elems:
        for v in elems:
            if u.vec == v.vec:
                continue
            diff = u.vec - v.vec
            cls = classify_root(g, diff)
            if cls != RootClass.NOT_ROOT:
                return False, Violation(u, v, diff, cls)
    return True, None


def enumerate_real_roots(
    g: GCM2, max_index: int, include_negatives: bool = False
) -> list[SignedRoot]:
    """All ``beta_i^j`` with ``j <= max_index``, in (family, index) order,
    with the negatives appended as a block if requested."""
    if g.is_finite():
        raise ValueError("real-root window needs a*b >= 4")
    if max_index < 0:
        raise ValueError(f"max_index must be non-negative, got {max_index}")
    out = [
        signed_root(g, family, j)
        for family in (1, 2)
        for j in range(max_index + 1)
    ]
    if include_negatives:
        out += [
            signed_root(g, family, j, -1)
            for family in (1, 2)
            for j in range(max_index + 1)
        ]
    return out


MAX_SUBSET_SIZE = 4


def enumerate_pi_systems(
    g: GCM2,
    max_index: int,
    max_size: int,
    include_negatives: bool = False,
    mode: str = STANDARD,
) -> list[PiSystem]:
    """Every pi-system of size 1..max_size inside the index window.

    Plain power-set filtering in deterministic order (by size, then by
    position within the window).  ``max_size`` is capped at 4: no larger
    system of real roots exists, so a wider search is pointless.
    """
    if max_size < 1 or max_size > MAX_SUBSET_SIZE:
        raise ValueError(f"max_size must be in 1..{MAX_SUBSET_SIZE}, got {max_size}")
    if mode == EXTENDED and include_negatives:
        raise ValueError("extended mode admits positive roots only")
    window = enumerate_real_roots(g, max_index, include_negatives)
    out = []
    for size in range(1, max_size + 1):
        for combo in combinations(window, size):
            cand = pi_system(combo, mode)
            ok, _ = is_pi_system(g, cand)
            if ok:
                out.append(cand)
    return out


@dataclass(frozen=True)
class DerivedGCM:
    """Matrix of Cartan pairings over a pi-system, in the recorded order."""

    entries: tuple[tuple[int, ...], ...]
    order: tuple[SignedRoot, ...]

    def det2(self) -> int:
        if len(self.entries) != 2:
            raise ValueError("determinant shortcut is for 2x2 matrices")
        return 4 - self.entries[0][1] * self.entries[1][0]

    def cartan_type(self) -> str:
        if len(self.entries) == 1:
            return "finite"
        d = self.det2()
        if d > 0:
            return "finite"
        if d == 0:
            return "affine"
        return "hyperbolic"


def derived_gcm(g: GCM2, s: PiSystem) -> DerivedGCM:
    """Pairing matrix ``entries[i][j] = <beta_j, beta_i^vee>`` of a standard
    pi-system, with integrality and GCM shape asserted."""
    if s.mode != STANDARD:
        raise PiSystemContractError("derived matrices are defined for standard mode")
    validate_elements(g, s)
    order = tuple(sorted(s.elements, key=_canonical_key))
    n = len(order)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            p = pairing(g, order[j].vec, order[i].vec)
            if p.denominator != 1:
                raise ArithmeticError(
                    f"non-integral pairing {p} between real roots "
                    f"{order[j].vec} and {order[i].vec}"
                )
            row.append(int(p))
        rows.append(tuple(row))
    entries = tuple(rows)
    for i in range(n):
        if entries[i][i] != 2:
            raise ArithmeticError(f"diagonal entry {entries[i][i]} != 2 at {i}")
        for j in range(n):
            if i == j:
                continue
            if entries[i][j] > 0:
                raise ArithmeticError(
                    f"positive off-diagonal entry {entries[i][j]} at ({i}, {j}): "
                    "input is not a pi-system"
                )
            if (entries[i][j] == 0) != (entries[j][i] == 0):
                raise ArithmeticError(f"asymmetric zero pattern at ({i}, {j})")
    return DerivedGCM(entries, order)


def is_linearly_independent(s: PiSystem) -> bool:
    """Rank of the coordinate matrix equals the system size (rank is <= 2)."""
    vecs = [el.vec for el in s.elements]
    if len(vecs) > 2:
        return False
    if len(vecs) == 2:
        return vecs[0].x * vecs[1].y - vecs[0].y * vecs[1].x != 0
    if len(vecs) == 1:
        return not vecs[0].is_zero()
    return True
