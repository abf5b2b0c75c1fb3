"""Closed-form classification of pi-systems and their derived matrices.

For ``a*b >= 5`` or ``(a, b) = (2, 2)`` the positive pi-systems of size two
are exactly the cross-family pairs ``{beta_1^j, beta_2^k}``, with the single
exception ``(j, k) = (1, 0)`` when ``b = 1``; mixed-sign systems are the
same-family pairs ``{beta_i^j, -beta_i^k}`` minus, for ``b = 1``, the index
gaps ``{s, s+2}`` of the parity matching the family.  The boundary matrix
``(4, 1)`` has its own congruence-based predicates.

The off-diagonal entries of the derived matrices satisfy the second-order
recurrence ``t[n] = (a*b - 2)*t[n-1] - t[n-2]``; the sequences ``xi`` (even
side), ``zeta`` (odd side) and the solution pairs ``(x[n], y[n])`` computed
here are cross-checked against direct Cartan pairings.  Isomorphism of two
derived matrices is decided as equality up to transpose after reducing the
index pair to its parity representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pi_systems import from_triples, derived_gcm
from .root_core import GCM2, pairing, positive_real_root

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

ORDER_CONSTANT = "constant"
ORDER_INTERLEAVED = "interleaved"
ORDER_INCREASING = "increasing"


def in_classification_regime(g: GCM2) -> bool:
    """The standing assumption for the classification: b >= 2, or b = 1 with
    a >= 5.  Equivalently a*b >= 5 or (a, b) = (2, 2)."""
    return g.b >= 2 or (g.b == 1 and g.a >= 5)


def _require_regime(g: GCM2) -> None:
    if not in_classification_regime(g):
        raise ValueError(
            f"({g.a}, {g.b}) is outside the classification regime "
            "(need b >= 2, or b = 1 with a >= 5; (4, 1) has its own predicates)"
        )


def positive_pair_predicate(g: GCM2, j: int, k: int) -> bool:
    """Closed form: is ``{beta_1^j, beta_2^k}`` a pi-system?"""
    _require_regime(g)
    if g.b >= 2:
        return True
    return (j, k) != (1, 0)


def mixed_pair_predicate(g: GCM2, family: int, j: int, k: int) -> bool:
    """Closed form: is ``{beta_family^j, -beta_family^k}`` a pi-system?

    For ``b = 1`` the excluded pairs are exactly ``{s, s+2}`` with ``s`` odd
    for family 1 and even for family 2.
    """
    _require_regime(g)
    if family not in (1, 2):
        raise ValueError(f"family must be 1 or 2, got {family}")
    if g.b >= 2:
        return True
    lo, hi = min(j, k), max(j, k)
    if hi - lo != 2:
        return True
    excluded_parity = 1 if family == 1 else 0
    return lo % 2 != excluded_parity


POSITIVE_PAIR = "positive-pair"
MIXED_PAIR = "mixed-pair"


def affine41_predicate(kind: str, family: int | None, j: int, k: int) -> bool:
    """Pi-system predicates for the boundary matrix (4, 1).

    positive-pair: ``{beta_1^j, beta_2^k}`` works unless ``j`` is odd and
    ``k = j + 3 (mod 4)``.  mixed-pair: ``{beta_family^j, -beta_family^k}``
    works iff ``j`` or ``k`` differs from the family in parity, or
    ``j = k (mod 4)``.
    """
    if kind == POSITIVE_PAIR:
        return j % 2 != 1 or (k - (j + 3)) % 4 != 0
    if kind == MIXED_PAIR:
        if family not in (1, 2):
            raise ValueError(f"family must be 1 or 2, got {family}")
        return j % 2 != family % 2 or k % 2 != family % 2 or (j - k) % 4 == 0
    raise ValueError(f"unknown predicate kind {kind!r}")


@dataclass(frozen=True)
class PairingSequences:
    """Off-diagonal magnitudes of derived matrices against the base roots.

    ``eta[j]`` is minus the pairing of ``beta_1^j`` against the coroot of
    ``beta_2^0``; ``xi`` and ``zeta`` are its even and odd subsequences, and
    ``gamma[j]`` is the analogous family-2 magnitude, tied to ``xi`` by
    ``a*gamma[j] = b*xi[j]``.
    """

    eta: tuple[int, ...]
    xi: tuple[int, ...]
    zeta: tuple[int, ...]
    gamma: tuple[int, ...]
    ordering: str


def _int_pairing(g: GCM2, beta, alpha) -> int:
    p = pairing(g, beta, alpha)
    if p.denominator != 1:
        raise ArithmeticError(f"non-integral pairing {p}")
    return int(p)


def pairing_sequences(g: GCM2, n: int) -> PairingSequences:
    """Compute eta/xi/zeta/gamma up to index ``n`` two ways and assert they
    agree: directly via Cartan pairings, and via the entry recurrence."""
    if g.is_finite():
        raise ValueError("pairing sequences need a*b >= 4")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    base2 = positive_real_root(g, 2, 0)
    base1 = positive_real_root(g, 1, 0)
    eta = tuple(
        -_int_pairing(g, positive_real_root(g, 1, j), base2)
        for j in range(2 * n + 2)
    )
    gamma = tuple(
        -_int_pairing(g, positive_real_root(g, 2, 2 * j), base1)
        for j in range(n + 1)
    )
    xi = tuple(eta[2 * j] for j in range(n + 1))
    zeta = tuple(eta[2 * j + 1] for j in range(n + 1))

    m = g.a * g.b - 2
    xi_rec = [g.a, g.a * (g.a * g.b - 3)]
    zeta_rec = [m, m * m - 2]
    for i in range(2, n + 1):
        xi_rec.append(m * xi_rec[-1] - xi_rec[-2])
        zeta_rec.append(m * zeta_rec[-1] - zeta_rec[-2])
    if tuple(xi_rec[: n + 1]) != xi or tuple(zeta_rec[: n + 1]) != zeta:
        raise ArithmeticError(
            f"recurrence and direct pairings disagree for ({g.a}, {g.b}): "
            f"xi {xi_rec[: n + 1]} vs {xi}, zeta {zeta_rec[: n + 1]} vs {zeta}"
        )
    for j in range(n + 1):
        if g.a * gamma[j] != g.b * xi[j]:
            raise ArithmeticError(f"a*gamma != b*xi at {j}: {gamma[j]} vs {xi[j]}")

    if g.a == 2 and g.b == 2:
        ordering = ORDER_CONSTANT
    elif g.b == 1:
        ordering = ORDER_INTERLEAVED
    else:
        ordering = ORDER_INCREASING
    return PairingSequences(eta, xi, zeta, gamma, ordering)


@dataclass(frozen=True)
class OffDiagonalSolutions:
    """The pairs ``(x[n], y[n])`` realizable as off-diagonals of the derived
    matrix of a congruent-index pair: same recurrence, initial values
    ``x = (b, b*(ab-3))`` and ``y = (a, a*(ab-3))``."""

    x: tuple[int, ...]
    y: tuple[int, ...]


def off_diagonal_solutions(g: GCM2, n: int) -> OffDiagonalSolutions:
    if g.is_finite():
        raise ValueError("solution sequences need a*b >= 4")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    m = g.a * g.b - 2
    x = [g.b, g.b * (g.a * g.b - 3)]
    y = [g.a, g.a * (g.a * g.b - 3)]
    for i in range(2, n + 1):
        x.append(m * x[-1] - x[-2])
        y.append(m * y[-1] - y[-2])
    return OffDiagonalSolutions(tuple(x[: n + 1]), tuple(y[: n + 1]))


def match_congruent_entries(
    sol: OffDiagonalSolutions, matrix: Matrix2
) -> tuple[int, bool] | None:
    """Does the 2x2 GCM arise from a congruent-index pair?  Off-diagonals
    ``(c1, c2) = (x[n], y[n])`` match the even-even representative directly;
    ``(y[n], x[n])`` (n >= 1) is its transpose, realized by the odd-odd
    representative.  Returns (n, transposed) or None."""
    c1, c2 = -matrix[0][1], -matrix[1][0]
    for n in range(len(sol.x)):
        if (c1, c2) == (sol.x[n], sol.y[n]):
            return n, False
        if n >= 1 and (c1, c2) == (sol.y[n], sol.x[n]):
            return n, True
    return None


def symmetric_entry_index(g: GCM2, s: int, bound: int) -> int | None:
    """Index ``n`` with ``s = zeta[n]`` if the symmetric matrix
    ``[[2, -s], [-s, 2]]`` arises from a non-congruent pair, else None."""
    seqs = pairing_sequences(g, max(bound, 1))
    for n, z in enumerate(seqs.zeta):
        if z == s:
            return n
    return None


def _reduce_index_pair(g: GCM2, j: int, k: int) -> tuple[int, int]:
    # parity representative; kept unreduced when the target fails the predicate
    if (j + k) % 2 == 1 or j % 2 == 0:
        target = (j + k, 0)
    else:
        target = (j + k - 1, 1)
    return target if positive_pair_predicate(g, *target) else (j, k)


def _pair_matrix(g: GCM2, j: int, k: int) -> Matrix2:
    m = derived_gcm(g, from_triples(g, [(1, j, 1), (2, k, 1)])).entries
    return ((m[0][0], m[0][1]), (m[1][0], m[1][1]))


def _transpose(m: Matrix2) -> Matrix2:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def isomorphic_systems(
    g: GCM2, s1: tuple[int, int], s2: tuple[int, int]
) -> bool:
    """Decide whether two index pairs generate isomorphic subalgebras.

    Both pairs must be pi-systems.  Each is reduced to its parity
    representative, then the derived matrices are compared up to transpose
    (simultaneous reordering of a 2x2 GCM is exactly transposition).
    """
    for j, k in (s1, s2):
        if not positive_pair_predicate(g, j, k):
            raise ValueError(f"({j}, {k}) is not a pi-system for ({g.a}, {g.b})")
    m1 = _pair_matrix(g, *_reduce_index_pair(g, *s1))
    m2 = _pair_matrix(g, *_reduce_index_pair(g, *s2))
    return m1 == m2 or m1 == _transpose(m2)


@dataclass(frozen=True)
class TableRow:
    """One classification-table row: which systems, what matrix, what type."""

    case: str
    subcase: str
    jk: tuple[int, int]
    symmetric: bool
    matrix: Matrix2
    cartan_type: str


def _matrix_type(matrix: Matrix2) -> str:
    det = 4 - matrix[0][1] * matrix[1][0]
    if det > 0:
        return "finite"
    if det == 0:
        return "affine"
    return "hyperbolic"


def classification_table(g: GCM2, rows: int) -> list[TableRow]:
    """Concrete table of derived matrices, one pair of rows per index.

    For ``(2, 2)`` the table collapses to its two affine rows; otherwise each
    ``j < rows`` yields the odd row ``(2j+1, 0)`` with symmetric matrix
    ``[[2, -zeta[j]], [-zeta[j], 2]]`` and the even row ``(2j, 0)`` with
    ``[[2, -gamma[j]], [-xi[j], 2]]``.
    """
    _require_regime(g)
    if rows < 1:
        raise ValueError(f"need rows >= 1, got {rows}")
    if g.a == 2 and g.b == 2:
        affine = ((2, -2), (-2, 2))
        out = [
            TableRow("a=b=2", "any", (1, 0), True, affine, _matrix_type(affine)),
            TableRow("a=b=2", "any", (0, 0), True, affine, _matrix_type(affine)),
        ]
    else:
        seqs = pairing_sequences(g, rows)
        subcase = "a=b" if g.a == g.b else "a!=b"
        out = []
        for j in range(rows):
            z = seqs.zeta[j]
            odd = ((2, -z), (-z, 2))
            out.append(
                TableRow("ab>=5", "any", (2 * j + 1, 0), True, odd, _matrix_type(odd))
            )
            even = ((2, -seqs.gamma[j]), (-seqs.xi[j], 2))
            out.append(
                TableRow(
                    "ab>=5", subcase, (2 * j, 0), g.a == g.b, even, _matrix_type(even)
                )
            )
    for row in out:
        declared = "affine" if row.case == "a=b=2" else "hyperbolic"
        if row.cartan_type != declared:
            raise ArithmeticError(
                f"determinant sign of {row.matrix} contradicts declared "
                f"{declared} type"
            )
    return out
