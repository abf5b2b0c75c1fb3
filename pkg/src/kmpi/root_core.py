"""Exact integer primitives for the rank-2 root lattice.

A rank-2 generalized Cartan matrix ``[[2, -a], [-b, 2]]`` with ``a >= b >= 1``
determines a root lattice spanned by the two simple roots.  Everything here is
computed in exact integer (or rational) arithmetic:

* the coefficient sequences ``c`` and ``d`` generated by the coupled
  recurrences ``c[k+2] = a*d[k+1] - c[k]`` and ``d[k+2] = b*c[k+1] - d[k]``,
  which parameterize the positive real roots when ``a*b >= 4``;
* the invariant bilinear form, stored scaled by ``b`` so that all values are
  integers (the form itself has ``(alpha2, alpha2) = 2a/b``);
* classification of arbitrary lattice vectors into real/imaginary roots,
  non-roots and zero;
* the Weyl group action through the two simple reflections.

Values of ``c`` and ``d`` grow exponentially for ``a*b > 4``, so arbitrary
precision integers are essential; Python ints give that for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

FINITE = "finite"
AFFINE = "affine"
HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class GCM2:
    """Rank-2 generalized Cartan matrix ``[[2, -a], [-b, 2]]``, ``a >= b >= 1``.

    ``swapped`` records that the constructor exchanged the caller's entries to
    restore the ``a >= b`` convention.
    """

    a: int
    b: int
    swapped: bool = False

    def det(self) -> int:
        return 4 - self.a * self.b

    def cartan_type(self) -> str:
        d = self.det()
        if d > 0:
            return FINITE
        if d == 0:
            return AFFINE
        return HYPERBOLIC

    def is_finite(self) -> bool:
        return self.a * self.b < 4


def make_gcm(a: int, b: int) -> GCM2:
    """Build a GCM2, swap-normalizing so that ``a >= b``.

    Entries must be positive: ``a = 0`` or ``b = 0`` would make the matrix
    decomposable, which is out of scope here.
    """
    if a < 1 or b < 1:
        raise ValueError(f"off-diagonal parameters must be positive, got ({a}, {b})")
    if a < b:
        return GCM2(b, a, swapped=True)
    return GCM2(a, b)


@dataclass(frozen=True)
class RootVec:
    """Lattice vector ``x*alpha1 + y*alpha2`` with integer coordinates."""

    x: int
    y: int

    def __add__(self, other: RootVec) -> RootVec:
        return RootVec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: RootVec) -> RootVec:
        return RootVec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> RootVec:
        return RootVec(-self.x, -self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


ALPHA1 = RootVec(1, 0)
ALPHA2 = RootVec(0, 1)


class RootClass(Enum):
    """Classification of a lattice vector relative to the root system."""

    REAL_POSITIVE = "real_positive"
    REAL_NEGATIVE = "real_negative"
    IMAGINARY_POSITIVE = "imaginary_positive"
    IMAGINARY_NEGATIVE = "imaginary_negative"
    NOT_ROOT = "not_root"
    ZERO = "zero"

    @property
    def is_root(self) -> bool:
        return self in (
            RootClass.REAL_POSITIVE,
            RootClass.REAL_NEGATIVE,
            RootClass.IMAGINARY_POSITIVE,
            RootClass.IMAGINARY_NEGATIVE,
        )

    @property
    def is_real(self) -> bool:
        return self in (RootClass.REAL_POSITIVE, RootClass.REAL_NEGATIVE)

    @property
    def is_imaginary(self) -> bool:
        return self in (RootClass.IMAGINARY_POSITIVE, RootClass.IMAGINARY_NEGATIVE)

    @property
    def is_positive(self) -> bool:
        return self in (RootClass.REAL_POSITIVE, RootClass.IMAGINARY_POSITIVE)

    def negated(self) -> RootClass:
        """Class of ``-v`` given the class of ``v``."""
        flips = {
            RootClass.REAL_POSITIVE: RootClass.REAL_NEGATIVE,
            RootClass.REAL_NEGATIVE: RootClass.REAL_POSITIVE,
            RootClass.IMAGINARY_POSITIVE: RootClass.IMAGINARY_NEGATIVE,
            RootClass.IMAGINARY_NEGATIVE: RootClass.IMAGINARY_POSITIVE,
        }
        return flips.get(self, self)


@dataclass(frozen=True)
class SequenceTable:
    """The coefficient sequences ``c[0..n]`` and ``d[0..n]``."""

    c: tuple[int, ...]
    d: tuple[int, ...]


@lru_cache(maxsize=None)
def _cd(a: int, b: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    c = [0, 1]
    d = [0, 1]
    for k in range(n - 1):
        c.append(a * d[k + 1] - c[k])
        d.append(b * c[k + 1] - d[k])
    return tuple(c[: n + 1]), tuple(d[: n + 1])


def coefficient_sequences(g: GCM2, n: int) -> SequenceTable:
    """Unroll the coupled recurrences up to index ``n`` (inclusive), ``n >= 1``."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    c, d = _cd(g.a, g.b, n)
    return SequenceTable(c, d)


@dataclass(frozen=True)
class RootIndex:
    """Position of a positive real root: family 1 or 2, index ``j >= 0``.

    Family 1 is ``c[j]*alpha1 + d[j+1]*alpha2``; family 2 is
    ``c[j+1]*alpha1 + d[j]*alpha2``.  Together the two families exhaust the
    positive real roots whenever ``a*b >= 4``.
    """

    family: int
    j: int


def positive_real_root(g: GCM2, family: int, j: int) -> RootVec:
    """The j-th positive real root of the given family (``a*b >= 4`` only)."""
    if g.is_finite():
        raise ValueError(
            "the two-family parameterization needs a*b >= 4; "
            "use enumerate_finite_roots for finite type"
        )
    if family not in (1, 2):
        raise ValueError(f"family must be 1 or 2, got {family}")
    if j < 0:
        raise ValueError(f"index must be non-negative, got {j}")
    c, d = _cd(g.a, g.b, j + 1)
    if family == 1:
        return RootVec(c[j], d[j + 1])
    return RootVec(c[j + 1], d[j])


def root_at(g: GCM2, idx: RootIndex) -> RootVec:
    return positive_real_root(g, idx.family, idx.j)


def bilinear_scaled(g: GCM2, u: RootVec, v: RootVec) -> int:
    """``b`` times the invariant form: ``2b*ux*vx + 2a*uy*vy - ab*(ux*vy + uy*vx)``.

    Scaling by ``b`` keeps values integral; all sign tests agree with the
    unscaled form.
    """
    a, b = g.a, g.b
    return 2 * b * u.x * v.x + 2 * a * u.y * v.y - a * b * (u.x * v.y + u.y * v.x)


def norm_scaled(g: GCM2, v: RootVec) -> int:
    return bilinear_scaled(g, v, v)


def classify_root(g: GCM2, v: RootVec) -> RootClass:
    """Classify a lattice vector as a real/imaginary root, non-root or zero.

    For positive-norm vectors the real-root criterion requires both rescaled
    coordinates ``2b*x/q`` and ``2a*y/q`` (with ``q`` the scaled norm) to be
    integers, plus sign-coherent coordinates.  Non-positive norm vectors with
    sign-coherent coordinates are imaginary roots.  Finite-type matrices
    delegate to the exhaustively enumerated root set.
    """
    if v.is_zero():
        return RootClass.ZERO
    if g.is_finite():
        return _classify_finite(g, v)
    positive = v.x >= 0 and v.y >= 0
    negative = v.x <= 0 and v.y <= 0
    q = norm_scaled(g, v)
    if q > 0:
        # divisibility of 2b*x and 2a*y by q is the exact-rational condition
        # k_i * (alpha_i, alpha_i) / (v, v) integral, cleared of denominators
        if (2 * g.b * v.x) % q == 0 and (2 * g.a * v.y) % q == 0:
            if positive:
                return RootClass.REAL_POSITIVE
            if negative:
                return RootClass.REAL_NEGATIVE
        return RootClass.NOT_ROOT
    if positive:
        return RootClass.IMAGINARY_POSITIVE
    if negative:
        return RootClass.IMAGINARY_NEGATIVE
    # unreachable for a*b >= 4: mixed-sign vectors have positive norm
    return RootClass.NOT_ROOT


def simple_reflection(g: GCM2, i: int, v: RootVec) -> RootVec:
    """Reflection in the i-th simple root (i = 1 or 2); an involutive isometry."""
    if i == 1:
        return RootVec(g.a * v.y - v.x, v.y)
    if i == 2:
        return RootVec(v.x, g.b * v.x - v.y)
    raise ValueError(f"reflection index must be 1 or 2, got {i}")


def apply_weyl_word(g: GCM2, word: tuple[int, ...] | list[int], v: RootVec) -> RootVec:
    """Apply the Weyl group element spelled by ``word`` to ``v``.

    The word is a product of generators read left to right, so the rightmost
    letter acts first: ``(2, 1)`` applied to ``v`` is ``s2(s1(v))``.
    """
    for i in reversed(word):
        v = simple_reflection(g, i, v)
    return v


def pairing(g: GCM2, beta: RootVec, alpha: RootVec) -> Fraction:
    """Cartan pairing ``2*(beta, alpha)/(alpha, alpha)`` as an exact rational.

    ``alpha`` must be a real root, otherwise its coroot is undefined.
    """
    if not classify_root(g, alpha).is_real:
        raise ValueError(f"pairing against non-real vector {alpha}: coroot undefined")
    return Fraction(2 * bilinear_scaled(g, beta, alpha), norm_scaled(g, alpha))


@lru_cache(maxsize=None)
def _finite_root_set(a: int, b: int) -> tuple[RootVec, ...]:
    roots = {RootVec(1, 0), RootVec(0, 1), RootVec(-1, 0), RootVec(0, -1)}
    g = GCM2(a, b)
    frontier = set(roots)
    while frontier:
        new = set()
        for v in frontier:
            for i in (1, 2):
                w = simple_reflection(g, i, v)
                if w not in roots:
                    new.add(w)
        roots |= new
        frontier = new
    return tuple(sorted(roots, key=lambda r: (r.x, r.y)))


def enumerate_finite_roots(g: GCM2) -> list[RootVec]:
    """Close the simple roots under reflections; only valid for ``a*b <= 3``.

    Root counts: 6 for (1,1), 8 for (2,1), 12 for (3,1).
    """
    if not g.is_finite():
        raise ValueError(f"({g.a}, {g.b}) is not of finite type")
    return list(_finite_root_set(g.a, g.b))


def _classify_finite(g: GCM2, v: RootVec) -> RootClass:
    if v in _finite_root_set(g.a, g.b):
        if v.x >= 0 and v.y >= 0:
            return RootClass.REAL_POSITIVE
        return RootClass.REAL_NEGATIVE
    return RootClass.NOT_ROOT
