"""Taut foliation decision for Seifert fibered rational homology spheres.

The verdict combines three ingredients:

* the Eisenbud-Hirsch-Neumann / Jankins-Neumann / Naimi range test on b0,
  which settles every case except b0 in {1, n-1};
* orientation reversal, which trades b0 = n-1 for b0 = 1;
* for b0 = 1, the arithmetic condition Property (*) on a pair (m, alpha):

      b1/a1 < (m - alpha)/m,   b2/a2 < alpha/m,   b_i/a_i < 1/m  (i >= 3)

  for coefficients sorted non-increasingly.

Non-existence verdicts are labelled C0 only when n <= 3 and C2 otherwise,
since taut C0 foliations are only known to be isotopic to horizontal ones
for three exceptional fibers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput
from .invariants import SeifertInvariant, euler_number, flip, normalize


@dataclass(frozen=True)
class PropertyStarWitness:
    m: int
    alpha: int

    def __post_init__(self):
        if not 0 < self.alpha < self.m:
            raise InvalidInput(f"witness needs 0 < alpha < m, got m={self.m}, alpha={self.alpha}")


class Verdict(str, enum.Enum):
    ADMITS = "AdmitsTautAnalytic"
    NO_C2 = "NoTautC2"
    NO_C0 = "NoTautC0"
    NOT_APPLICABLE = "NotApplicable"


class Rule(str, enum.Enum):
    EHN1 = "Ehn1"
    EHN2_OUT_OF_RANGE = "Ehn2OutOfRange"
    PROPERTY_STAR_FOUND = "PropertyStarFound"
    PROPERTY_STAR_EMPTY = "PropertyStarEmpty"
    SMALL_N = "SmallN"
    NOT_QHS = "NotQHSInput"


_REGULARITY = {
    Verdict.ADMITS: "analytic",
    Verdict.NO_C2: "C2",
    Verdict.NO_C0: "C0",
    Verdict.NOT_APPLICABLE: None,
}


@dataclass(frozen=True)
class TautVerdict:
    tag: Verdict
    rule: Rule
    witness: PropertyStarWitness | None = None
    invariant: SeifertInvariant | None = None  # normalized input
    reduced: SeifertInvariant | None = None  # orientation actually tested (b0 = 1 when flipped)
    flipped: bool = False

    @property
    def regularity(self) -> str | None:
        return _REGULARITY[self.tag]

    @property
    def admits(self) -> bool:
        return self.tag is Verdict.ADMITS

    @property
    def coefficients(self) -> tuple[Fraction, ...] | None:
        """Sorted coefficient list the witness refers to."""
        if self.reduced is None:
            return None
        return self.reduced.coefficients


def check_coefficients(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) < 3:
        raise InvalidInput(f"Property (*) needs at least three coefficients, got {len(coeffs)}")
    for c in coeffs:
        if not 0 < c < 1:
            raise InvalidInput(f"coefficient {c} outside (0, 1)")
    for x, y in zip(coeffs, coeffs[1:]):
        if x < y:
            raise InvalidInput(f"coefficients not sorted non-increasingly: {x} < {y}")
    return coeffs


def property_star_holds(coeffs: Sequence[Fraction], w: PropertyStarWitness) -> bool:
    coeffs = check_coefficients(coeffs)
    m, alpha = w.m, w.alpha
    if not coeffs[0] < Fraction(m - alpha, m):
        return False
    if not coeffs[1] < Fraction(alpha, m):
        return False
    # sorted, so the largest tail coefficient decides (iii)
    return coeffs[2] < Fraction(1, m)


def witness_bound(coeffs: Sequence[Fraction]) -> int:
    """Largest m allowed by (iii): the biggest integer strictly below 1/c3."""
    c3 = Fraction(coeffs[2])
    return -(-c3.denominator // c3.numerator) - 1


def search_witness(coeffs: Sequence[Fraction]) -> PropertyStarWitness | None:
    """Lexicographically smallest (m, alpha) satisfying Property (*), or None.

    Complete: (iii) forces m < 1/c3, so no m beyond ``witness_bound`` can work.
    For each m the admissible alpha form the integers in the open interval
    (m*c2, m*(1 - c1)); only the smallest candidate needs checking.
    """
    coeffs = check_coefficients(coeffs)
    c1, c2 = coeffs[0], coeffs[1]
    p1, q1 = c1.numerator, c1.denominator
    p2, q2 = c2.numerator, c2.denominator
    for m in range(2, witness_bound(coeffs) + 1):
        alpha = m * p2 // q2 + 1
        # alpha < m*(1 - c1)  <=>  alpha*q1 < m*(q1 - p1)
        if alpha < m and alpha * q1 < m * (q1 - p1):
            return PropertyStarWitness(m, alpha)
    return None


def decide_taut(M: SeifertInvariant) -> TautVerdict:
    """Decide whether M admits a taut foliation, with the rule that settles it."""
    M = normalize(M)
    n, b0 = M.n, M.b0
    if euler_number(M) == 0:
        return TautVerdict(Verdict.NOT_APPLICABLE, Rule.NOT_QHS, invariant=M)
    if n <= 2:
        return TautVerdict(Verdict.NO_C0, Rule.SMALL_N, invariant=M)
    no = Verdict.NO_C0 if n == 3 else Verdict.NO_C2
    if b0 <= 0 or b0 >= n:
        return TautVerdict(no, Rule.EHN2_OUT_OF_RANGE, invariant=M)
    if 2 <= b0 <= n - 2:
        return TautVerdict(Verdict.ADMITS, Rule.EHN1, invariant=M)
    reduced, flipped = M, False
    if b0 == n - 1:
        reduced, flipped = flip(M), True
    assert reduced.b0 == 1
    w = search_witness(reduced.coefficients)
    if w is None:
        return TautVerdict(no, Rule.PROPERTY_STAR_EMPTY, None, M, reduced, flipped)
    return TautVerdict(Verdict.ADMITS, Rule.PROPERTY_STAR_FOUND, w, M, reduced, flipped)
