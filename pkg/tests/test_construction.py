from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seifert_taut.census import coprime_tuples, solve_zhs
from seifert_taut.construction import (
    Branch,
    ReductionTriple,
    Step1Case,
    base_quantities,
    bezout_uv,
    construct_witness,
    reduce_to_three,
    witness_eps_minus,
    witness_eps_plus,
)
from seifert_taut.errors import (
    ConstructionMismatch,
    InvalidInput,
    NotZHS,
    PoincareExcluded,
    SphereExcluded,
    WrongB0,
)
from seifert_taut.foliation import PropertyStarWitness as W
from seifert_taut.foliation import property_star_holds, search_witness
from seifert_taut.invariants import SeifertInvariant

M = SeifertInvariant.of


def triple(*cs):
    return ReductionTriple(*map(F, cs))


def test_reduce_to_three_examples():
    t = reduce_to_three([F(1, 2), F(1, 3), F(1, 7)])
    assert t.coefficients == (F(1, 2), F(1, 3), F(1, 7)) and t.case is None
    t = reduce_to_three([F(1, 2), F(1, 3), F(1, 10), F(1, 11)])
    assert t.coefficients == (F(1, 2), F(1, 3), F(21, 110)) and t.case is Step1Case.MERGED_LESS
    t = reduce_to_three([F(1, 2), F(1, 5), F(1, 6), F(1, 7)])
    assert t.coefficients == (F(1, 2), F(13, 42), F(1, 5)) and t.case is Step1Case.MERGED_GREATER


def test_reduce_to_three_rejects_bad_lists():
    with pytest.raises(InvalidInput):
        reduce_to_three([F(1, 2), F(1, 2), F(1, 3)])
    with pytest.raises(InvalidInput):
        reduce_to_three([F(9, 10), F(4, 5), F(3, 5), F(1, 2)])


def test_base_quantities_examples():
    q = base_quantities(triple("1/2", "1/3", "1/7"))
    assert (q.alpha1, q.alpha2, q.a, q.b, q.N) == (F(1, 2), F(1, 3), 6, 1, 6)
    q = base_quantities(triple("1/2", "2/7", "1/5"))
    assert (q.a, q.b, q.N, q.n_alpha1, q.n_alpha1_integral) == (14, 3, 4, 2, True)
    q = base_quantities(triple("2/3", "1/5", "1/8"))
    assert (q.alpha1, q.alpha2, q.a, q.b, q.N) == (F(1, 3), F(1, 5), 15, 2, 7)
    assert (q.n_alpha1, q.r, q.r_prime, q.r_double_prime) == (F(7, 3), F(1, 3), F(1, 2), F(1, 2))
    assert q.b * 1 == q.a * (q.alpha1 - q.alpha2)


def test_base_quantities_errors():
    with pytest.raises(InvalidInput):
        base_quantities(triple("1/3", "1/4", "1/5"))
    with pytest.raises(InvalidInput):
        base_quantities(triple("1/2", "1/2", "1/5"))


def test_bezout_examples():
    assert bezout_uv(6, 1) == (1, 5)
    assert bezout_uv(15, 2) == (1, 7)
    assert bezout_uv(14, 3) == (2, 9)
    with pytest.raises(InvalidInput):
        bezout_uv(6, 4)
    with pytest.raises(InvalidInput):
        bezout_uv(3, 5)


@given(st.integers(2, 10**6).flatmap(lambda a: st.tuples(st.just(a), st.integers(1, a - 1))))
def test_bezout_matches_modular_inverse(ab):
    a, b = ab
    if gcd(a, b) != 1:
        with pytest.raises(InvalidInput):
            bezout_uv(a, b)
        return
    u, v = bezout_uv(a, b)
    assert a * u - b * v == 1
    assert 0 < u <= b and 0 < v <= a
    # independent route: u is the inverse of a modulo b
    assert u % b == (pow(a, -1, b) if b > 1 else 0)


def test_eps_minus_examples():
    t = triple("1/2", "1/3", "1/7")
    assert witness_eps_minus(t, base_quantities(t)) == (W(5, 2), Branch.B_EQUALS_1)
    t = triple("1/2", "2/7", "1/5")
    assert witness_eps_minus(t, base_quantities(t)) == (W(3, 1), Branch.CASE_A)
    t = triple("2/3", "1/5", "1/8")
    assert witness_eps_minus(t, base_quantities(t)) == (W(7, 2), Branch.CASE_B)


def test_eps_plus_examples():
    t = triple("1/2", "1/3", "2/11")
    assert witness_eps_plus(t, base_quantities(t), 11, 2) == (W(5, 2), Branch.CASE_II_B2_EQ1, (1, 5, 1))
    t = triple("1/2", "2/7", "2/9")
    assert witness_eps_plus(t, base_quantities(t), 9, 2) == (W(3, 1), Branch.CASE_I_A, (2, 9, 0))
    t = triple("1/2", "2/5", "1/9")
    w, branch, _ = witness_eps_plus(t, base_quantities(t), 9, 1)
    assert (w, branch) == (W(7, 3), Branch.CASE_II_B2_GE2)


def test_eps_plus_rejects_poincare():
    t = triple("1/2", "1/3", "1/5")
    with pytest.raises(PoincareExcluded):
        witness_eps_plus(t, base_quantities(t), 5, 1)


def test_small_alpha2_branch_on_synthetic_triple():
    # a = 10, b = 3, (u, v) = (1, 3): the branch fires only because c2 = 1/5 < 1/v,
    # which forces the third coefficient 1/3 above c2; the verifier must catch it
    t = triple("1/2", "1/5", "1/3")
    # base quantities depend on c1, c2 only; take them from a non-integral triple
    q = base_quantities(triple("1/2", "1/5", "1/7"))
    assert bezout_uv(q.a, q.b) == (1, 3)
    with pytest.raises(ConstructionMismatch, match="CaseIII_smallAlpha2.*\\(3, 1\\)"):
        witness_eps_plus(t, q, 3, 1, coeffs=[F(1, 2), F(1, 3), F(1, 5)])


@given(st.integers(2, 60), st.integers(1, 59), st.integers(2, 60), st.integers(1, 59))
def test_small_alpha2_window_is_empty(a1, b1, a2, b2):
    # b/a < b2/a2 < b/(a - 1) would need 2*alpha2 - alpha1 (a multiple of 1/a) below b/(a(a-1))
    c1, c2 = F(b1 % a1 or 1, a1), F(b2 % a2 or 1, a2)
    if c1 < F(1, 2) or c2 >= c1:
        return
    a = c1.denominator * c2.denominator
    b = a - c1.numerator * c2.denominator - c2.numerator * c1.denominator
    if b <= 0:
        return
    assert not F(b, a) < c2 < F(b, a - 1)


def test_construct_examples():
    tr = construct_witness(M(-1, (1, 2), (1, 3), (1, 7)))
    assert (tr.witness, tr.branch, tr.epsilon, tr.verified) == (W(5, 2), Branch.B_EQUALS_1, -1, True)
    assert tr.bezout is None
    tr = construct_witness(M(-1, (1, 2), (1, 3), (2, 11)))
    assert (tr.witness, tr.branch, tr.epsilon, tr.verified) == (W(5, 2), Branch.CASE_II_B2_EQ1, 1, True)
    u, v, p = tr.bezout
    assert tr.quantities.a * u - tr.quantities.b * v == 1


def test_construct_flips_and_serializes():
    tr = construct_witness(M(-2, (6, 7), (2, 3), (1, 2)))
    assert tr.flipped and tr.witness == W(5, 2)
    d = tr.as_dict()
    assert d["branch"] == "BEquals1" and d["quantities"]["N"] == 6
    assert d["quantities"]["alpha2"] == "1/3"


def test_construct_errors():
    with pytest.raises(PoincareExcluded):
        construct_witness(M(-1, (1, 2), (1, 3), (1, 5)))
    with pytest.raises(PoincareExcluded):
        construct_witness(M(-2, (1, 2), (2, 3), (4, 5)))
    with pytest.raises(NotZHS):
        construct_witness(M(-1, (1, 2), (2, 5), (1, 8)))
    with pytest.raises(SphereExcluded):
        construct_witness(M(-1, (1, 2), (1, 3)))
    # b0 = 2 with n = 5 lies strictly inside the range handled without a witness
    m = solve_zhs((2, 3, 5, 7, 11), 1)
    assert m.b0 == 2
    with pytest.raises(WrongB0):
        construct_witness(m)


def test_construct_all_below_half():
    tr = construct_witness(M(-1, (2, 5), (1, 3), (1, 4)))
    assert tr.epsilon == -1 and tr.verified
    assert tr.branch is Branch.ALL_BELOW_HALF and tr.witness == W(2, 1)


def test_construction_agrees_with_search_on_small_census():
    branches = set()
    for n, a_max in ((3, 40), (4, 17), (5, 13)):
        for t in coprime_tuples(n, a_max):
            for eps in (1, -1):
                m = solve_zhs(t, eps)
                if m.b0 not in (1, n - 1) or sorted(t) == [2, 3, 5]:
                    continue
                tr = construct_witness(m)
                assert tr.verified
                assert property_star_holds(tr.invariant.coefficients, tr.witness)
                assert search_witness(tr.invariant.coefficients) is not None
                branches.add(tr.branch)
    assert {Branch.CASE_C, Branch.CASE_I_C, Branch.CASE_III_GENERAL} <= branches
