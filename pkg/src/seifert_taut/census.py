"""Exhaustive censuses of Seifert invariants and machine checks of the main claims.

Enumeration is lazy and order-stable: tuples of multiplicities come out in
lexicographic order, slope multisets in the order of a fixed slope pool.
Orientation pairs {M, -M} collapse to the representative with positive
Euler number.
"""

from __future__ import annotations

import csv
import enum
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, prod
from typing import IO, Iterable, Iterator

import numpy as np

from .construction import (
    HALF,
    WitnessTrace,
    bezout_uv,
    construct_witness,
    fraction_str,
)
from .errors import ConstructionError, GeometryNotApplicable, InvalidInput
from .foliation import (
    PropertyStarWitness,
    Rule,
    TautVerdict,
    decide_taut,
    property_star_holds,
    search_witness,
)
from .invariants import (
    Exceptional,
    GeometryClass,
    GeometryTag,
    HomologyClass,
    HomologyTag,
    SeifertInvariant,
    Slope,
    canonical_form,
    detect_exceptional,
    flip,
    geometry,
    homology_class,
    normalize,
    pairwise_coprime,
    sort_slopes,
)


# -- records -------------------------------------------------------------------

COLUMNS = (
    "c", "b0", "n", "slopes", "euler", "homology", "epsilon", "geometry", "chi",
    "verdict", "regularity", "rule", "flipped", "witness_m", "witness_alpha",
    "constructed_m", "constructed_alpha", "constructed_branch", "verified",
    "construction_error",
)
INT_COLUMNS = {"c", "b0", "n", "epsilon", "witness_m", "witness_alpha", "constructed_m", "constructed_alpha"}
BOOL_COLUMNS = {"flipped", "verified"}


@dataclass(frozen=True)
class CensusRecord:
    invariant: SeifertInvariant
    homology: HomologyClass
    geometry: GeometryClass | None
    verdict: TautVerdict
    constructed: WitnessTrace | None = None
    construction_error: str | None = None

    @property
    def searched(self) -> PropertyStarWitness | None:
        return self.verdict.witness

    def to_row(self) -> dict:
        M, g, v, t = self.invariant, self.geometry, self.verdict, self.constructed
        return {
            "c": M.euler_part,
            "b0": M.b0 if self.homology.is_qhs else None,
            "n": M.n,
            "slopes": [str(s) for s in M.slopes],
            "euler": fraction_str(self.homology.euler),
            "homology": self.homology.tag.value,
            "epsilon": self.homology.epsilon,
            "geometry": g.tag.value if g else None,
            "chi": fraction_str(g.chi) if g else None,
            "verdict": v.tag.value,
            "regularity": v.regularity,
            "rule": v.rule.value,
            "flipped": v.flipped,
            "witness_m": v.witness.m if v.witness else None,
            "witness_alpha": v.witness.alpha if v.witness else None,
            "constructed_m": t.witness.m if t else None,
            "constructed_alpha": t.witness.alpha if t else None,
            "constructed_branch": t.branch.value if t else None,
            "verified": t.verified if t else None,
            "construction_error": self.construction_error,
        }


def classify(M: SeifertInvariant) -> CensusRecord:
    """Full classification of one manifold in the given orientation.

    For integral homology spheres whose b0 is 1 or n-1 the explicit
    construction is run independently of the witness search.
    """
    M = normalize(M)
    h = homology_class(M)
    try:
        g = geometry(M)
    except GeometryNotApplicable:
        g = None
    v = decide_taut(M)
    constructed, error = None, None
    if (
        h.tag is HomologyTag.ZHS
        and v.rule in (Rule.PROPERTY_STAR_FOUND, Rule.PROPERTY_STAR_EMPTY)
        and detect_exceptional(M) is Exceptional.GENERIC
    ):
        try:
            constructed = construct_witness(M)
        except ConstructionError as exc:
            error = f"{type(exc).__name__}: {exc}"
    return CensusRecord(M, h, g, v, constructed, error)


# -- enumeration ---------------------------------------------------------------

def coprime_tuples(n: int, a_max: int) -> Iterator[tuple[int, ...]]:
    """Strictly increasing pairwise coprime tuples 2 <= a1 < ... < an <= a_max."""
    prefix: list[int] = []

    def extend(start):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for a in range(start, a_max + 1):
            if all(gcd(a, x) == 1 for x in prefix):
                prefix.append(a)
                yield from extend(a + 1)
                prefix.pop()

    yield from extend(2)


def solve_zhs(multiplicities: tuple[int, ...], epsilon: int) -> SeifertInvariant:
    """The normalized invariant with these multiplicities and (prod a_i) * e = epsilon."""
    if epsilon not in (1, -1):
        raise InvalidInput(f"epsilon must be +1 or -1, got {epsilon}")
    if any(a < 2 for a in multiplicities) or not pairwise_coprime(multiplicities):
        raise InvalidInput(f"{multiplicities} is not a pairwise coprime tuple of integers >= 2")
    A = prod(multiplicities)
    slopes = []
    total = 0
    for a in multiplicities:
        cofactor = A // a
        b = epsilon * pow(cofactor, -1, a) % a
        slopes.append(Slope(b, a))
        total += b * cofactor
    k, rem = divmod(total - epsilon, A)
    assert rem == 0
    return SeifertInvariant(-k, sort_slopes(slopes))


def brute_force_zhs(multiplicities: tuple[int, ...], epsilon: int) -> list[SeifertInvariant]:
    """Every normalized invariant with these multiplicities and (prod a_i) * e = epsilon.

    Scans all b_i in (0, a_i); the Euler part is then forced. Independent of
    the modular inverse route used by :func:`solve_zhs`.
    """
    A = prod(multiplicities)
    grids = np.meshgrid(*[np.arange(1, a, dtype=np.int64) for a in multiplicities], indexing="ij")
    total = sum(g * (A // a) for g, a in zip(grids, multiplicities))
    hits = np.argwhere((total - epsilon) % A == 0)
    out = []
    for idx in hits:
        bs = [int(i) + 1 for i in idx]
        s = sum(b * (A // a) for b, a in zip(bs, multiplicities))
        c = -((s - epsilon) // A)
        out.append(SeifertInvariant(c, sort_slopes(Slope(b, a) for b, a in zip(bs, multiplicities))))
    return out


def zhs_invariants(n: int, a_max: int) -> Iterator[SeifertInvariant]:
    """One integral homology sphere per tuple of multiplicities, up to orientation."""
    for t in coprime_tuples(n, a_max):
        seen = set()
        for eps in (1, -1):
            M = canonical_form(solve_zhs(t, eps))
            if M.key() not in seen:
                seen.add(M.key())
                yield M


def enumerate_zhs(n: int, a_max: int) -> Iterator[CensusRecord]:
    if n < 3:
        raise InvalidInput("enumerate_zhs needs n >= 3")
    for M in zhs_invariants(n, a_max):
        yield classify(M)


def slope_pool(a_max: int, upper: Fraction = Fraction(1)) -> list[Slope]:
    pool = [Slope(b, a) for a in range(2, a_max + 1) for b in range(1, a) if gcd(a, b) == 1]
    return list(sort_slopes(s for s in pool if s.value <= upper))


def default_b0_range(n: int) -> tuple[int, ...]:
    # 1..n-1 plus the out-of-range sentinels 0 and n
    return tuple(range(0, n + 1))


def qhs_invariants(n: int, a_max: int, b0_range=None) -> Iterator[SeifertInvariant]:
    """Normalized invariants with n slopes of multiplicity <= a_max, b0 in range and e != 0.

    Deduplicated by canonical form without bookkeeping: an invariant with e < 0
    is replaced by its flip only when the flip (b0 -> n - b0) lies outside
    the enumerated range; otherwise the flip is met on its own.
    """
    if n < 3:
        raise InvalidInput("qhs enumeration needs n >= 3")
    b0s = tuple(default_b0_range(n) if b0_range is None else b0_range)
    b0_set = set(b0s)
    for combo in combinations_with_replacement(slope_pool(a_max), n):
        total = sum((s.value for s in combo), Fraction(0))
        for b0 in b0s:
            e = total - b0
            if e == 0:
                continue
            M = SeifertInvariant(-b0, combo)
            if e > 0:
                yield M
            elif n - b0 not in b0_set:
                yield flip(M)


def enumerate_qhs(n: int, a_max: int, b0_range=None) -> Iterator[CensusRecord]:
    for M in qhs_invariants(n, a_max, b0_range):
        yield classify(M)


# -- families ------------------------------------------------------------------

FAMILY_NAMES = ("M1", "M2", "M3", "M4")


def _tail_slopes(tail) -> list[Slope]:
    return [s if isinstance(s, Slope) else Slope(*s) for s in tail]


def _family_member(head, tail) -> SeifertInvariant:
    return SeifertInvariant(-1, sort_slopes(list(head) + list(tail)))


def _check_m12_tail(name: str, n: int, tail: list[Slope]):
    if len(tail) != n - 2:
        raise InvalidInput(f"{name}({n}) needs {n - 2} tail slopes, got {len(tail)}")
    for s in tail:
        if not 0 < s.b < s.a:
            raise InvalidInput(f"tail slope {s} must lie in (0, 1)")
    tail = sort_slopes(tail)
    if name == "M1":
        if tail[0].value > Fraction(3, 5):
            raise InvalidInput("M1 tail slopes must not exceed 3/5")
    else:
        if not Fraction(1, 5) < tail[0].value <= Fraction(2, 5):
            raise InvalidInput("M2 needs 1/5 < b3/a3 <= 2/5")
    if n == 3 and tail[0].a < 4:
        raise InvalidInput(f"{name}(3) needs a3 >= 4")


def family(name: str, **params) -> Iterator[SeifertInvariant]:
    """Members of the families M1(n), M2(n), M3, M4(n), all with Euler part -1.

    M1/M2: ``n`` plus either ``tail=[(b, a), ...]``, ``a3``/``b3`` (n = 3) or
    ``a_max`` to enumerate all admissible tails. M3: ``k`` or ``k_max``.
    M4: ``n`` plus ``b=[b4, ..., bn]`` or ``b_max``.
    """
    if name not in FAMILY_NAMES:
        raise InvalidInput(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    if name == "M3":
        ks = [params["k"]] if "k" in params else range(1, params.get("k_max", 1) + 1)
        for k in ks:
            if k < 1:
                raise InvalidInput("M3 needs k >= 1")
            yield _family_member([Slope(1, 2), Slope(2, 5)], [Slope(k, 7 * k + 1)])
        return

    n = params.get("n", 3 if name != "M4" else 4)
    if name == "M4":
        if n <= 3:
            raise InvalidInput("M4(n) needs n > 3")
        if "b" in params:
            choices = [tuple(params["b"])]
        else:
            choices = combinations_with_replacement(range(1, params.get("b_max", 1) + 1), n - 3)
        for bs in choices:
            if len(bs) != n - 3 or any(b < 1 for b in bs):
                raise InvalidInput(f"M4({n}) needs {n - 3} numerators >= 1")
            tail = [Slope(b, 10 * b + 1) for b in bs]
            yield _family_member([Slope(1, 2), Slope(2, 5), Slope(1, 10)], tail)
        return

    if n < 3:
        raise InvalidInput(f"{name}(n) needs n >= 3")
    head = [Slope(1, 2), Slope(3, 5) if name == "M1" else Slope(2, 5)]
    if "tail" in params or "a3" in params:
        if "tail" in params:
            tail = _tail_slopes(params["tail"])
        else:
            tail = [Slope(params.get("b3", 1), params["a3"])]
        _check_m12_tail(name, n, tail)
        yield _family_member(head, tail)
        return
    a_max = params.get("a_max", 10)
    if name == "M1":
        pool = slope_pool(a_max, Fraction(3, 5))
    else:
        pool = slope_pool(a_max, Fraction(2, 5))
    for tail in combinations_with_replacement(pool, n - 2):
        if name == "M2" and not tail[0].value > Fraction(1, 5):
            continue
        if n == 3 and tail[0].a < 4:
            continue
        yield _family_member(head, tail)


# -- verification --------------------------------------------------------------

class Claim(str, enum.Enum):
    MAIN_THEOREM_1 = "MainTheorem1"
    MAIN_THEOREM_2 = "MainTheorem2"
    GEOM_NO_TAUT = "GeomNoTaut"
    PROP_GLOBAL = "PropGlobal"
    CLAIM_8_2 = "Claim8_2"
    LEMMA_8_3 = "Lemma8_3"
    WITNESS_AGREEMENT = "WitnessAgreement"
    ZHS_UNIQUENESS = "ZhsUniqueness"


@dataclass(frozen=True)
class Bounds:
    n: tuple[int, ...] = (3,)
    a_max: int = 20
    b0_range: tuple[int, ...] | None = None
    k_max: int = 50  # M3 members
    b_max: int = 3  # M4 tail numerators


@dataclass
class VerificationReport:
    claim: Claim
    bounds: Bounds
    checked: int = 0
    exceptions: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "claim": self.claim.value,
            "passed": self.passed,
            "bounds": asdict(self.bounds),
            "checked": self.checked,
            "exceptions": list(self.exceptions),
            "failures": list(self.failures),
            "notes": dict(self.notes),
        }


def b0_one_orientation(M: SeifertInvariant) -> SeifertInvariant:
    M = normalize(M)
    return flip(M) if M.b0 == M.n - 1 and M.b0 != 1 else M


def _verify_main1(report: VerificationReport):
    b = report.bounds
    for n in b.n:
        for rec in enumerate_zhs(n, b.a_max):
            report.checked += 1
            M = rec.invariant
            kind = detect_exceptional(M)
            if kind in (Exceptional.POINCARE, Exceptional.SPHERE_LIKE):
                report.exceptions.append(f"{kind.value} {M}")
                if rec.verdict.admits:
                    report.failures.append(f"{M}: excluded manifold reported as admitting")
                continue
            if not rec.verdict.admits:
                report.failures.append(f"{M}: verdict {rec.verdict.tag.value}")
            if rec.verdict.rule is Rule.PROPERTY_STAR_FOUND:
                if rec.constructed is None or not rec.constructed.verified:
                    report.failures.append(f"{M}: construction failed ({rec.construction_error})")


def _verify_main2(report: VerificationReport):
    b = report.bounds
    members: list[tuple[str, SeifertInvariant]] = []
    for n in b.n:
        members += [("M1", M) for M in family("M1", n=n, a_max=b.a_max)]
        members += [("M2", M) for M in family("M2", n=n, a_max=b.a_max)]
        if n > 3:
            members += [("M4", M) for M in family("M4", n=n, b_max=b.b_max)]
    members += [("M3", M) for M in family("M3", k_max=b.k_max)]
    counts: dict[str, int] = {}
    for name, M in members:
        report.checked += 1
        counts[name] = counts.get(name, 0) + 1
        h = homology_class(M)
        g = geometry(M)
        if h.tag is not HomologyTag.NON_INTEGRAL:
            report.failures.append(f"{name} {M}: homology {h.tag.value}")
        if g.tag is not GeometryTag.SL2R:
            report.failures.append(f"{name} {M}: geometry {g.tag.value}")
        v = decide_taut(M)
        if name in ("M1", "M2"):
            if v.admits or search_witness(M.coefficients) is not None:
                report.failures.append(f"{name} {M}: expected no taut foliation")
        else:
            if not v.admits or not property_star_holds(M.coefficients, PropertyStarWitness(7, 3)):
                report.failures.append(f"{name} {M}: expected (7, 3) to witness a taut foliation")
    report.notes["members"] = counts


def _verify_geom_notaut(report: VerificationReport):
    b = report.bounds
    non_sl2r = 0
    for n in b.n:
        for M in qhs_invariants(n, b.a_max, b.b0_range):
            report.checked += 1
            g = geometry(M)
            if g.tag is GeometryTag.SL2R:
                continue
            non_sl2r += 1
            v = decide_taut(M)
            if v.admits:
                report.failures.append(f"{M}: {g.tag.value} geometry but verdict {v.tag.value}")
    report.notes["non_sl2r"] = non_sl2r


def _verify_prop_global(report: VerificationReport):
    b = report.bounds
    half4 = tuple([Slope(1, 2)] * 4)
    non_sl2r = 0
    for n in b.n:
        for M in qhs_invariants(n, b.a_max, b.b0_range):
            report.checked += 1
            g = geometry(M)
            if g.tag is GeometryTag.SL2R:
                continue
            non_sl2r += 1
            h = homology_class(M)
            if M.n > 4:
                report.failures.append(f"{M}: {g.tag.value} with n = {M.n}")
            elif M.n == 4:
                if M.slopes != half4 or M.b0 == 2 or h.tag is not HomologyTag.NON_INTEGRAL:
                    report.failures.append(f"{M}: unexpected non-SL2R invariant with n = 4")
                if g.tag is not GeometryTag.NIL:
                    report.failures.append(f"{M}: n = 4 but geometry {g.tag.value}")
            if h.tag is HomologyTag.ZHS:
                kind = detect_exceptional(M)
                if g.tag is GeometryTag.NIL or kind not in (Exceptional.SPHERE_LIKE, Exceptional.POINCARE):
                    report.failures.append(f"{M}: integral with {g.tag.value} geometry but {kind.value}")
                else:
                    report.exceptions.append(f"{kind.value} {M}")
    report.notes["non_sl2r"] = non_sl2r


def zhs_triples_b0_one(a_max: int) -> Iterator[tuple[int, SeifertInvariant]]:
    """(epsilon, M) for every integral homology sphere with n = 3 in the b0 = 1 orientation."""
    for t in coprime_tuples(3, a_max):
        M = b0_one_orientation(solve_zhs(t, 1))
        yield homology_class(M).epsilon, M


def _verify_triples(report: VerificationReport, which: Claim):
    below_half = 0
    for eps, M in zhs_triples_b0_one(report.bounds.a_max):
        c1, c2, c3 = M.coefficients
        if c1 < HALF:
            below_half += 1
            continue
        report.checked += 1
        alpha1, alpha2 = 1 - c1, c2
        a1, b1, a2, b2 = c1.denominator, c1.numerator, c2.denominator, c2.numerator
        a3, b3 = c3.denominator, c3.numerator
        a = a1 * a2
        b = a - b1 * a2 - b2 * a1
        if which is Claim.CLAIM_8_2:
            if not c2 < HALF:
                report.failures.append(f"{M}: b2/a2 >= 1/2")
            if not c3 < Fraction(1, 4):
                report.failures.append(f"{M}: b3/a3 >= 1/4")
            if not alpha2 > alpha1 - alpha2:
                report.failures.append(f"{M}: alpha2 <= alpha1 - alpha2")
            if c3 != alpha1 - alpha2 + Fraction(eps, a1 * a2 * a3):
                report.failures.append(f"{M}: b3/a3 != alpha1 - alpha2 + eps/(a1 a2 a3)")
            if a * b3 - b * a3 != eps:
                report.failures.append(f"{M}: a*b3 - b*a3 != eps")
            if eps == 1:
                u, v = bezout_uv(a, b)
                p, rem = divmod(a3 - v, a)
                if rem or p < 0 or b3 != u + b * p:
                    report.failures.append(f"{M}: third slope not (u + bp)/(v + ap)")
        else:
            if b <= 0 or a // b < 4:
                report.failures.append(f"{M}: N = floor(a/b) < 4 (a={a}, b={b})")
    report.notes["skipped_all_below_half"] = below_half


def _verify_agreement(report: VerificationReport):
    b = report.bounds
    branches: dict[str, int] = {}
    for n in b.n:
        for rec in enumerate_zhs(n, b.a_max):
            if rec.verdict.rule not in (Rule.PROPERTY_STAR_FOUND, Rule.PROPERTY_STAR_EMPTY):
                continue
            if detect_exceptional(rec.invariant) is not Exceptional.GENERIC:
                report.exceptions.append(f"{detect_exceptional(rec.invariant).value} {rec.invariant}")
                continue
            report.checked += 1
            coeffs = rec.verdict.coefficients
            if rec.searched is None or not property_star_holds(coeffs, rec.searched):
                report.failures.append(f"{rec.invariant}: searched witness missing or invalid")
            t = rec.constructed
            if t is None or not property_star_holds(coeffs, t.witness):
                report.failures.append(f"{rec.invariant}: constructed witness missing or invalid ({rec.construction_error})")
            else:
                branches[t.branch.value] = branches.get(t.branch.value, 0) + 1
    report.notes["branches"] = dict(sorted(branches.items()))


def _verify_uniqueness(report: VerificationReport):
    b = report.bounds
    for n in b.n:
        for t in coprime_tuples(n, b.a_max):
            solved = {}
            for eps in (1, -1):
                report.checked += 1
                M = solve_zhs(t, eps)
                solved[eps] = M
                found = brute_force_zhs(t, eps)
                if len(found) != 1:
                    report.failures.append(f"{t} eps={eps}: {len(found)} brute-force solutions")
                elif found[0].key() != M.key():
                    report.failures.append(f"{t} eps={eps}: solve_zhs {M} != brute force {found[0]}")
                if homology_class(M).epsilon != eps:
                    report.failures.append(f"{t} eps={eps}: {M} has the wrong epsilon")
            if canonical_form(flip(solved[1])).key() != canonical_form(solved[-1]).key():
                report.failures.append(f"{t}: flip of the eps=+1 solution is not the eps=-1 solution")


_DEFAULT_BOUNDS = {
    Claim.MAIN_THEOREM_1: Bounds(n=(3,), a_max=50),
    Claim.MAIN_THEOREM_2: Bounds(n=(3,), a_max=60, k_max=50),
    Claim.GEOM_NO_TAUT: Bounds(n=(3, 4), a_max=12),
    Claim.PROP_GLOBAL: Bounds(n=(3, 4, 5, 6), a_max=8),
    Claim.CLAIM_8_2: Bounds(n=(3,), a_max=100),
    Claim.LEMMA_8_3: Bounds(n=(3,), a_max=100),
    Claim.WITNESS_AGREEMENT: Bounds(n=(3,), a_max=50),
    Claim.ZHS_UNIQUENESS: Bounds(n=(3,), a_max=20),
}


def default_bounds(claim: Claim) -> Bounds:
    return _DEFAULT_BOUNDS[Claim(claim)]


def verify(claim: Claim | str, bounds: Bounds | None = None) -> VerificationReport:
    """Run one claim's predicate over its enumeration; failures are data, not errors."""
    claim = Claim(claim)
    report = VerificationReport(claim, bounds or default_bounds(claim))
    if claim is Claim.MAIN_THEOREM_1:
        _verify_main1(report)
    elif claim is Claim.MAIN_THEOREM_2:
        _verify_main2(report)
    elif claim is Claim.GEOM_NO_TAUT:
        _verify_geom_notaut(report)
    elif claim is Claim.PROP_GLOBAL:
        _verify_prop_global(report)
    elif claim in (Claim.CLAIM_8_2, Claim.LEMMA_8_3):
        _verify_triples(report, claim)
    elif claim is Claim.WITNESS_AGREEMENT:
        _verify_agreement(report)
    else:
        _verify_uniqueness(report)
    return report


def records_for(invariants: Iterable[SeifertInvariant]) -> Iterator[CensusRecord]:
    for M in invariants:
        yield classify(M)


# -- serialization -------------------------------------------------------------

REPORT_COLUMNS = ("kind", "claim", "passed", "checked", "detail")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(value)
    return str(value)


def _report_rows(report: VerificationReport) -> list[dict]:
    summary = {
        "kind": "summary",
        "claim": report.claim.value,
        "passed": report.passed,
        "checked": report.checked,
        "detail": json.dumps({"bounds": asdict(report.bounds), "notes": report.notes}),
    }
    rows = [summary]
    for kind, items in (("failure", report.failures), ("exception", report.exceptions)):
        rows += [{"kind": kind, "claim": report.claim.value, "passed": None, "checked": None, "detail": d} for d in items]
    return rows


def _write(handle: IO[str], items, fmt: str) -> int:
    if isinstance(items, VerificationReport):
        if fmt == "jsonl":
            handle.write(json.dumps(items.as_dict()) + "\n")
            return 1
        writer = csv.DictWriter(handle, fieldnames=REPORT_COLUMNS, lineterminator="\r\n")
        writer.writeheader()
        rows = _report_rows(items)
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        return len(rows)

    count = 0
    if fmt == "jsonl":
        for rec in items:
            handle.write(json.dumps(rec.to_row()) + "\n")
            count += 1
        return count
    writer = csv.DictWriter(handle, fieldnames=COLUMNS, lineterminator="\r\n")
    writer.writeheader()
    for rec in items:
        writer.writerow({k: _csv_cell(v) for k, v in rec.to_row().items()})
        count += 1
    return count


def emit(items, fmt: str, path) -> int:
    """Write records (or one report) as jsonl or csv; returns the number of data rows.

    ``path`` may be ``"-"`` for standard output.
    """
    if fmt not in ("jsonl", "csv"):
        raise InvalidInput(f"unknown format {fmt!r}; expected jsonl or csv")
    if str(path) == "-":
        return _write(sys.stdout, items, fmt)
    try:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            return _write(handle, items, fmt)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write census output: {exc.strerror}", str(path)) from exc


def _typed(column: str, cell: str):
    if cell == "":
        return [] if column == "slopes" else None
    if column in INT_COLUMNS:
        return int(cell)
    if column in BOOL_COLUMNS:
        return cell == "true"
    if column == "slopes":
        return cell.split(" ")
    return cell


def read_records(path, fmt: str) -> list[dict]:
    """Inverse of :func:`emit` for record streams: rows equal ``CensusRecord.to_row()``."""
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            if fmt == "jsonl":
                return [json.loads(line) for line in handle if line.strip()]
            return [{k: _typed(k, v) for k, v in row.items()} for row in csv.DictReader(handle)]
    except OSError as exc:
        raise OSError(exc.errno, f"cannot read census output: {exc.strerror}", str(path)) from exc


def invariant_from_row(row: dict) -> SeifertInvariant:
    slopes = [Slope(*map(int, s.split("/"))) for s in row["slopes"]]
    return SeifertInvariant(int(row["c"]), tuple(slopes))

