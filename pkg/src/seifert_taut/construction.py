"""Explicit Property (*) witnesses for Seifert integral homology spheres with b0 = 1.

The construction follows the case analysis of the existence proof:

1. n > 3 is reduced to three coefficients by merging the tail
   c3' = sum_{i>=3} b_i/a_i (the merged slope is still reduced, because the
   multiplicities are pairwise coprime);
2. for the triple one forms alpha1 = 1 - c1, alpha2 = c2, a = a1*a2,
   b = a - b1*a2 - b2*a1 (so b/a = alpha1 - alpha2) and N = floor(a/b);
3. epsilon = -1 picks (m, alpha) from b = 1 or the A/B/C table;
4. epsilon = +1 writes a*u - b*v = 1 and splits on u != 1 (reuse the table),
   u = b = 1, and u = 1 < b.

Every result is re-checked against the full coefficient list with
:func:`property_star_holds`; a failure raises :class:`ConstructionMismatch`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from .errors import (
    ConstructionMismatch,
    InvalidInput,
    NotZHS,
    PoincareExcluded,
    SphereExcluded,
    WrongB0,
)
from .foliation import PropertyStarWitness, property_star_holds
from .invariants import (
    Exceptional,
    HomologyTag,
    SeifertInvariant,
    detect_exceptional,
    flip,
    homology_class,
    normalize,
)

HALF = Fraction(1, 2)
POINCARE_TRIPLE = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))


class Step1Case(str, enum.Enum):
    MERGED_LESS = "Case1"  # merged tail stays below c2
    MERGED_GREATER = "Case2"  # merged tail becomes the middle coefficient


class Branch(str, enum.Enum):
    ALL_BELOW_HALF = "AllBelowHalf"
    B_EQUALS_1 = "BEquals1"
    CASE_A = "CaseA"
    CASE_B = "CaseB"
    CASE_C = "CaseC"
    CASE_I_A = "CaseI_A"
    CASE_I_B = "CaseI_B"
    CASE_I_C = "CaseI_C"
    CASE_II_B_GT_HALF = "CaseII_bGtHalf"
    CASE_II_B2_EQ1 = "CaseII_b2Eq1"
    CASE_II_B2_GE2 = "CaseII_b2Ge2"
    CASE_III_SMALL_ALPHA2 = "CaseIII_smallAlpha2"
    CASE_III_GENERAL = "CaseIII_general"


@dataclass(frozen=True)
class ReductionTriple:
    c1: Fraction
    c2: Fraction
    c3: Fraction
    case: Step1Case | None = None

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c1, self.c2, self.c3)

    @property
    def epsilon(self) -> int | None:
        """+-1 when c1 + c2 + c3 = 1 + eps/(a1 a2 a3), i.e. M(-1; c1, c2, c3) is integral."""
        order = self.c1.denominator * self.c2.denominator * self.c3.denominator
        eps = (self.c1 + self.c2 + self.c3 - 1) * order
        return int(eps) if eps in (1, -1) else None


@dataclass(frozen=True)
class BaseQuantities:
    alpha1: Fraction
    alpha2: Fraction
    a: int
    b: int
    N: int
    n_alpha1_integral: bool
    r: Fraction
    r_prime: Fraction
    r_double_prime: Fraction

    @property
    def n_alpha1(self) -> Fraction:
        return self.N * self.alpha1

    def as_dict(self) -> dict:
        return {
            "alpha1": fraction_str(self.alpha1),
            "alpha2": fraction_str(self.alpha2),
            "a": self.a,
            "b": self.b,
            "N": self.N,
            "N_alpha1": fraction_str(self.n_alpha1),
            "N_alpha1_integral": self.n_alpha1_integral,
            "r": fraction_str(self.r),
            "r_prime": fraction_str(self.r_prime),
            "r_double_prime": fraction_str(self.r_double_prime),
        }


@dataclass(frozen=True)
class WitnessTrace:
    invariant: SeifertInvariant  # the b0 = 1 orientation that was worked on
    flipped: bool
    epsilon: int
    branch: Branch
    witness: PropertyStarWitness
    verified: bool
    triple: ReductionTriple | None = None
    quantities: BaseQuantities | None = None
    bezout: tuple[int, int, int] | None = None  # (u, v, p)

    @property
    def step1_case(self) -> Step1Case | None:
        return self.triple.case if self.triple else None

    def as_dict(self) -> dict:
        return {
            "invariant": str(self.invariant),
            "flipped": self.flipped,
            "epsilon": self.epsilon,
            "step1_case": self.step1_case.value if self.step1_case else None,
            "branch": self.branch.value,
            "triple": [fraction_str(c) for c in self.triple.coefficients] if self.triple else None,
            "quantities": self.quantities.as_dict() if self.quantities else None,
            "bezout": list(self.bezout) if self.bezout else None,
            "witness_m": self.witness.m,
            "witness_alpha": self.witness.alpha,
            "verified": self.verified,
        }


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _frac_part(x: Fraction) -> Fraction:
    return x - floor(x)


def _witness(m: int, alpha: int) -> PropertyStarWitness:
    try:
        return PropertyStarWitness(m, alpha)
    except InvalidInput as exc:
        raise ConstructionMismatch(str(exc)) from None


def _check(cond: bool, what: str):
    if not cond:
        raise ConstructionMismatch(what)


def reduce_to_three(coeffs: Sequence[Fraction]) -> ReductionTriple:
    coeffs = [Fraction(c) for c in coeffs]
    if len(coeffs) < 3:
        raise InvalidInput("need at least three coefficients")
    if any(not 0 < c < 1 for c in coeffs):
        raise InvalidInput(f"coefficients must lie in (0, 1): {coeffs}")
    if any(x <= y for x, y in zip(coeffs, coeffs[1:])):
        raise InvalidInput(f"coefficients must be strictly decreasing: {coeffs}")
    c1, c2 = coeffs[0], coeffs[1]
    if len(coeffs) == 3:
        return ReductionTriple(c1, c2, coeffs[2])
    merged = sum(coeffs[2:], Fraction(0))
    if merged >= 1:
        raise InvalidInput(f"merged tail {merged} is not a slope in (0, 1)")
    if merged < c2:
        return ReductionTriple(c1, c2, merged, Step1Case.MERGED_LESS)
    if merged == c2 or merged >= c1:
        raise InvalidInput(f"merged tail {merged} collides with the leading coefficients")
    return ReductionTriple(c1, merged, c2, Step1Case.MERGED_GREATER)


def base_quantities(t: ReductionTriple) -> BaseQuantities:
    if t.c1 < HALF:
        raise InvalidInput(f"leading coefficient {t.c1} < 1/2; (2, 1) already works")
    alpha1 = 1 - t.c1
    alpha2 = t.c2
    a1, b1 = t.c1.denominator, t.c1.numerator
    a2, b2 = t.c2.denominator, t.c2.numerator
    a = a1 * a2
    b = a - b1 * a2 - b2 * a1
    if b <= 0:
        raise InvalidInput(f"alpha1 - alpha2 = {b}/{a} is not positive")
    assert Fraction(b, a) == alpha1 - alpha2
    N = a // b
    n_alpha1 = N * alpha1
    if t.epsilon is not None:
        _check(N >= 4, f"N = {N} < 4 for integral triple {t.coefficients}")
    return BaseQuantities(
        alpha1=alpha1,
        alpha2=alpha2,
        a=a,
        b=b,
        N=N,
        n_alpha1_integral=n_alpha1.denominator == 1,
        r=_frac_part(n_alpha1),
        r_prime=_frac_part(Fraction(a, b)),
        r_double_prime=_frac_part(a * alpha1 / b),
    )


def _egcd(x: int, y: int) -> tuple[int, int, int]:
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def bezout_uv(a: int, b: int) -> tuple[int, int]:
    """The unique (u, v) with a*u - b*v = 1, 0 < u <= b, 0 < v <= a."""
    if not a > b >= 1:
        raise InvalidInput(f"need a > b >= 1, got a={a}, b={b}")
    g, x, _ = _egcd(a, b)
    if g != 1:
        raise InvalidInput(f"gcd({a}, {b}) = {g} != 1")
    u = x % b or b
    v = (a * u - 1) // b
    return u, v


def _table_selection(q: BaseQuantities) -> tuple[PropertyStarWitness, str]:
    """The A/B/C choice; conditions follow the Step 3 case table."""
    if q.n_alpha1_integral:
        return _witness(q.N - 1, int(q.n_alpha1) - 1), "A"
    alpha = floor(q.n_alpha1)
    if q.r_prime * q.alpha2 <= q.r_double_prime < q.alpha1 * q.r_prime:
        return _witness(q.N - 1, alpha), "C"
    return _witness(q.N, alpha), "B"


def _verify(coeffs: Sequence[Fraction], w: PropertyStarWitness, branch: Branch):
    if not property_star_holds(coeffs, w):
        raise ConstructionMismatch(
            f"branch {branch.value} produced (m, alpha) = ({w.m}, {w.alpha}) "
            f"which fails Property (*) for {[fraction_str(c) for c in coeffs]}"
        )


def witness_eps_minus(t: ReductionTriple, q: BaseQuantities, coeffs=None):
    """Witness for epsilon = -1; ``coeffs`` is the original list (defaults to the triple)."""
    if q.b == 1:
        w = _witness(q.a - 1, t.c1.denominator * t.c2.numerator)
        branch = Branch.B_EQUALS_1
    else:
        w, label = _table_selection(q)
        branch = Branch("Case" + label)
        # b/a < 1/m
        _check(q.b * w.m < q.a, f"(III) fails in branch {branch.value}")
    _verify(coeffs if coeffs is not None else t.coefficients, w, branch)
    return w, branch


def bezout_structure(q: BaseQuantities, a3: int, b3: int) -> tuple[int, int, int]:
    """(u, v, p) with b3 = u + b*p and a3 = v + a*p."""
    _check(q.a * b3 - q.b * a3 == 1, "a*b3 - b*a3 != 1")
    u, v = bezout_uv(q.a, q.b)
    p, rem = divmod(a3 - v, q.a)
    _check(rem == 0 and p >= 0 and b3 == u + q.b * p, "third slope not of the form (u + bp)/(v + ap)")
    return u, v, p


def witness_eps_plus(t: ReductionTriple, q: BaseQuantities, a3: int, b3: int, coeffs=None):
    """Witness for epsilon = +1; returns ``(witness, branch, (u, v, p))``."""
    if t.coefficients == POINCARE_TRIPLE:
        raise PoincareExcluded("the Poincare sphere has no Property (*) witness")
    u, v, p = bezout_structure(q, a3, b3)
    alpha1, alpha2 = q.alpha1, q.alpha2
    if u != 1:
        w, label = _table_selection(q)
        branch = Branch("CaseI_" + label)
        # u/v < 1/m, then (u + bp)/(v + ap) <= u/v gives (iii)
        _check(u * w.m < v, f"u/v = {u}/{v} not below 1/{w.m}")
    elif q.b == 1:
        b2 = t.c2.numerator
        if t.c1 > HALF:
            w, branch = _witness(q.a - 2, t.c1.denominator * b2), Branch.CASE_II_B_GT_HALF
        elif b2 == 1:
            w, branch = _witness(5, 2), Branch.CASE_II_B2_EQ1
        else:
            w, branch = _witness(4 * b2 - 1, 2 * b2 - 1), Branch.CASE_II_B2_GE2
    else:
        if alpha2 < Fraction(1, v):
            w, branch = _witness(v, 1), Branch.CASE_III_SMALL_ALPHA2
        else:
            branch = Branch.CASE_III_GENERAL
            alpha = ceil((v - 1) * alpha1) - 1
            cap = ceil(alpha / alpha2) - 1
            m = min(v - 1, cap)
            _check(1 <= alpha < m, f"1 <= alpha < m fails: alpha={alpha}, m={m}")
            _check(
                (alpha1 - alpha2) / alpha1 + alpha1 < 1 - Fraction(1, q.a),
                "(alpha1 - alpha2)/alpha1 + alpha1 < 1 - 1/a fails",
            )
            w = _witness(m, alpha)
    _verify(coeffs if coeffs is not None else t.coefficients, w, branch)
    return w, branch, (u, v, p)


def construct_witness(M: SeifertInvariant) -> WitnessTrace:
    """Build (m, alpha) for an integral homology sphere by the case analysis above."""
    M = normalize(M)
    h = homology_class(M)
    if h.tag is not HomologyTag.ZHS:
        raise NotZHS(f"{M} is not an integral homology sphere ({h.tag.value})")
    kind = detect_exceptional(M)
    if kind is Exceptional.SPHERE_LIKE:
        raise SphereExcluded(f"{M} is the 3-sphere")
    if kind is Exceptional.POINCARE:
        raise PoincareExcluded(f"{M} is the Poincare sphere (up to orientation)")
    reduced, flipped = M, False
    if M.b0 != 1 and M.b0 == M.n - 1:
        reduced, flipped = flip(M), True
    if reduced.b0 != 1:
        raise WrongB0(f"{M} has b0 = {M.b0}; the construction needs b0 in {{1, n-1}}")
    eps = homology_class(reduced).epsilon
    coeffs = reduced.coefficients

    if coeffs[0] < HALF:
        w = _witness(2, 1)
        _verify(coeffs, w, Branch.ALL_BELOW_HALF)
        return WitnessTrace(reduced, flipped, eps, Branch.ALL_BELOW_HALF, w, True)

    t = reduce_to_three(coeffs)
    _check(t.epsilon == eps, f"reduced triple has epsilon {t.epsilon}, expected {eps}")
    q = base_quantities(t)
    bezout = None
    if eps == -1:
        w, branch = witness_eps_minus(t, q, coeffs)
    else:
        w, branch, bezout = witness_eps_plus(t, q, t.c3.denominator, t.c3.numerator, coeffs)
    return WitnessTrace(reduced, flipped, eps, branch, w, True, t, q, bezout)
