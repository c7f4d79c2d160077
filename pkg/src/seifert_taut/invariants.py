"""Seifert invariants over the base sphere, with exact rational arithmetic.

An invariant is stored as an integer Euler part ``c`` and a list of slopes
``b_i/a_i`` so that the Euler number of the fibration is ``c + sum(b_i/a_i)``.
In the customary notation ``M(-b0, b1/a1, ..., bn/an)`` the first entry is
exactly ``c``, i.e. ``b0 = -c``.

Every operation here accepts an arbitrary valid invariant and normalizes it
first where the result depends on the normalized form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from .errors import GeometryNotApplicable, InvalidInvariant


@dataclass(frozen=True)
class Slope:
    """Exceptional slope b/a; ``a`` is the multiplicity of the fiber."""

    b: int
    a: int

    def __post_init__(self):
        if self.a == 0:
            raise InvalidInvariant(f"slope {self.b}/0 has zero multiplicity")
        if self.a < 0:
            raise InvalidInvariant(f"slope {self.b}/{self.a} has negative multiplicity")
        if gcd(self.b, self.a) != 1:
            raise InvalidInvariant(f"slope {self.b}/{self.a} is not in lowest terms")

    @property
    def value(self) -> Fraction:
        return Fraction(self.b, self.a)

    def __str__(self):
        return f"{self.b}/{self.a}"


def _slope_order(s: Slope):
    # non-increasing by value, ties by smaller multiplicity
    return (-Fraction(s.b, s.a), s.a)


def sort_slopes(slopes) -> tuple[Slope, ...]:
    return tuple(sorted(slopes, key=_slope_order))


@dataclass(frozen=True)
class SeifertInvariant:
    euler_part: int
    slopes: tuple[Slope, ...] = ()
    reversed: bool = False

    def __post_init__(self):
        slopes = tuple(s if isinstance(s, Slope) else Slope(*s) for s in self.slopes)
        object.__setattr__(self, "slopes", slopes)
        object.__setattr__(self, "euler_part", int(self.euler_part))

    @classmethod
    def of(cls, c: int, *slopes) -> "SeifertInvariant":
        """Build from ``(b, a)`` pairs or ``Fraction`` values.

        >>> SeifertInvariant.of(-1, (1, 2), (1, 3), (1, 5))
        SeifertInvariant(euler_part=-1, slopes=(Slope(b=1, a=2), Slope(b=1, a=3), Slope(b=1, a=5)), reversed=False)
        """
        out = []
        for s in slopes:
            if isinstance(s, Fraction):
                out.append(Slope(s.numerator, s.denominator))
            else:
                out.append(Slope(*s))
        return cls(c, tuple(out))

    @property
    def n(self) -> int:
        return len(self.slopes)

    @property
    def b0(self) -> int:
        return -self.euler_part

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(s.a for s in self.slopes)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(s.value for s in self.slopes)

    def key(self) -> tuple:
        """Orientation-flag-free identity used for deduplication."""
        return (self.euler_part, tuple((s.b, s.a) for s in self.slopes))

    def is_normalized(self) -> bool:
        if any(not (0 < s.b < s.a) for s in self.slopes):
            return False
        for s, t in zip(self.slopes, self.slopes[1:]):
            # s must precede t: s.b/s.a > t.b/t.a, or equal with s.a <= t.a
            lhs, rhs = s.b * t.a, t.b * s.a
            if lhs < rhs or (lhs == rhs and s.a > t.a):
                return False
        return True

    def __str__(self):
        return f"({self.euler_part}; {', '.join(map(str, self.slopes))})"

    def m_notation(self) -> str:
        return "M(" + ", ".join([str(self.euler_part)] + [str(s) for s in self.slopes]) + ")"


class HomologyTag(str, enum.Enum):
    NOT_QHS = "NotQHS"
    ZHS = "ZHS"
    NON_INTEGRAL = "NonIntegralQHS"


class GeometryTag(str, enum.Enum):
    SPHERICAL = "Spherical"
    NIL = "Nil"
    SL2R = "SL2R"


class Exceptional(str, enum.Enum):
    SPHERE_LIKE = "SphereLike"
    LENS_LIKE = "LensLike"
    POINCARE = "Poincare"
    GENERIC = "Generic"


@dataclass(frozen=True)
class HomologyClass:
    tag: HomologyTag
    euler: Fraction
    epsilon: int | None = None

    @property
    def is_qhs(self) -> bool:
        return self.tag is not HomologyTag.NOT_QHS


@dataclass(frozen=True)
class GeometryClass:
    tag: GeometryTag
    chi: Fraction


def normalize(raw: SeifertInvariant) -> SeifertInvariant:
    """Reduce every slope into (0, 1), absorbing integer parts into the Euler part."""
    c = raw.euler_part
    slopes = []
    for s in raw.slopes:
        q, r = divmod(s.b, s.a)
        c += q
        if r:
            slopes.append(Slope(r, s.a))
    return SeifertInvariant(c, sort_slopes(slopes), raw.reversed)


def _normalized(M: SeifertInvariant) -> SeifertInvariant:
    return M if M.is_normalized() else normalize(M)


def flip(M: SeifertInvariant) -> SeifertInvariant:
    """Orientation reversal M(c; b_i/a_i) -> -M(-n - c; (a_i - b_i)/a_i)."""
    M = _normalized(M)
    slopes = sort_slopes(Slope(s.a - s.b, s.a) for s in M.slopes)
    return SeifertInvariant(-M.n - M.euler_part, slopes, not M.reversed)


def euler_number(M: SeifertInvariant) -> Fraction:
    num, den = M.euler_part, 1
    for s in M.slopes:
        num, den = num * s.a + s.b * den, den * s.a
    return Fraction(num, den)


def pairwise_coprime(values) -> bool:
    return all(gcd(x, y) == 1 for x, y in combinations(values, 2))


def homology_class(M: SeifertInvariant) -> HomologyClass:
    M = _normalized(M)
    e = euler_number(M)
    if e == 0:
        return HomologyClass(HomologyTag.NOT_QHS, e)
    order = prod(M.multiplicities) * e
    if order in (1, -1):
        assert pairwise_coprime(M.multiplicities), M
        return HomologyClass(HomologyTag.ZHS, e, int(order))
    return HomologyClass(HomologyTag.NON_INTEGRAL, e)


def orbifold_chi(M: SeifertInvariant) -> Fraction:
    M = _normalized(M)
    num, den = 2 - M.n, 1
    for a in M.multiplicities:
        num, den = num * a + den, den * a
    return Fraction(num, den)


def geometry(M: SeifertInvariant) -> GeometryClass:
    M = _normalized(M)
    if euler_number(M) == 0:
        raise GeometryNotApplicable(f"{M} is not a rational homology sphere")
    if M.n <= 2:
        raise GeometryNotApplicable(f"{M} has at most two exceptional fibers")
    chi = orbifold_chi(M)
    if chi > 0:
        tag = GeometryTag.SPHERICAL
    elif chi == 0:
        tag = GeometryTag.NIL
    else:
        tag = GeometryTag.SL2R
    return GeometryClass(tag, chi)


def detect_exceptional(M: SeifertInvariant) -> Exceptional:
    M = _normalized(M)
    h = homology_class(M)
    if M.n <= 2:
        if h.tag is HomologyTag.ZHS:
            return Exceptional.SPHERE_LIKE
        return Exceptional.LENS_LIKE
    if h.tag is HomologyTag.ZHS and sorted(M.multiplicities) == [2, 3, 5]:
        return Exceptional.POINCARE
    return Exceptional.GENERIC


def canonical_form(M: SeifertInvariant) -> SeifertInvariant:
    """Representative of {M, flip(M)} with positive Euler number (M itself if e = 0)."""
    M = _normalized(M)
    if euler_number(M) < 0:
        return flip(M)
    return M
