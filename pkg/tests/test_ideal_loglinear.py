from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from weightideals import (FINGEN_ARRAY, INFGEN_ARRAY, BinomialDifference, LogLinearArray,
                          NotInIdealError, delta_polynomial, difference_alphabet,
                          enumerate_relations, infgen_witness, member_loglin,
                          reduces_over_shorter, solvable_weighted_sum, verify_appendix,
                          verify_fingen)
from weightideals.ideal_loglinear import RewriteSystem, closed_form_delta, weight_classes

from oracles import all_words, connected_by_rewriting, integer_weight, log_sigma

B = BinomialDifference
FINGEN_COL = (2, 3, 4, 6)
INFGEN_COL = (2, 4, 7)

SIX = [B((1, 2), (3, 1)), B((1, 3), (3, 2)), B((1, 3), (4, 1)), B((3, 2), (4, 1)),
       B((3, 3), (4, 2)), B((1, 4), (4, 3))]


def brute_relations(col, n):
    """All equal-weight pairs of length-n words, via integer powers of two."""
    t = len(col)
    words = all_words(t, n)
    return {frozenset((u, v)) for u, v in combinations(words, 2)
            if integer_weight(col, u) == integer_weight(col, v)}


def test_member_examples():
    assert member_loglin(FINGEN_ARRAY, B((1, 2), (3, 1)))
    pair = B((2, 3, 3, 3, 3, 2), (1, 2, 3, 1, 2, 3))
    assert member_loglin(INFGEN_ARRAY, pair)
    assert log_sigma(INFGEN_COL, 2, pair.lhs) == 342
    assert delta_polynomial(INFGEN_ARRAY, pair).coefficients == (2, 3, 0, 5, 3, -3)


def test_infgen_length_two_sums_distinct():
    sums = sorted(log_sigma(INFGEN_COL, 2, w) for w in all_words(3, 2))
    assert sums == sorted([6, 10, 16, 8, 12, 18, 11, 15, 21])
    assert enumerate_relations(INFGEN_ARRAY, 2) == []


def test_six_relations():
    rels = enumerate_relations(FINGEN_ARRAY, 2)
    assert rels == SIX
    assert {frozenset((r.lhs, r.rhs)) for r in rels} == brute_relations(FINGEN_COL, 2)


def test_relation_classes_at_length_two():
    sizes = {e: len(ws) for e, ws in weight_classes(FINGEN_ARRAY, 2).items() if len(ws) > 1}
    assert sizes == {8: 2, 10: 3, 12: 2, 14: 2}


@pytest.mark.parametrize("n", [3, 4])
def test_relations_match_brute_force(n):
    rels = enumerate_relations(FINGEN_ARRAY, n)
    assert {frozenset((r.lhs, r.rhs)) for r in rels} == brute_relations(FINGEN_COL, n)
    assert all(r.lhs < r.rhs for r in rels)


def test_trivial_ideal_for_lenlex_array():
    A = LogLinearArray((1, 2), 3)
    for n in range(1, 7):
        assert enumerate_relations(A, n) == []


def test_delta_shift_scaling():
    A = FINGEN_ARRAY
    d = delta_polynomial(A, B((1, 1, 3), (4, 1, 2)))
    for k in range(5):
        assert d.value(k) == 2 ** k * d.value(0) == 0
    d2 = delta_polynomial(A, B((1, 1), (2, 2)))
    assert d2.value() == -3 and d2.value(3) == -24


def test_difference_alphabet():
    al = difference_alphabet(FINGEN_ARRAY)
    assert 0 in al and al.max_abs == 4 and al.is_integral()
    assert set(al) == {a - b for a in FINGEN_COL for b in FINGEN_COL}


def test_reduces_over_shorter_example():
    tr = reduces_over_shorter(FINGEN_ARRAY, B((1, 1, 3), (4, 1, 2)))
    assert tr.words() == [(1, 1, 3), (1, 3, 2), (4, 1, 2)]
    assert str(tr) == "x1x1x3 <-> x1x3x2 <-> x4x1x2"
    assert tr.check(FINGEN_ARRAY)
    with pytest.raises(NotInIdealError):
        reduces_over_shorter(FINGEN_ARRAY, B((1, 1, 1), (2, 2, 2)))
    with pytest.raises(ValueError):
        reduces_over_shorter(FINGEN_ARRAY, B((1, 2), (3, 1)), 2)


def test_every_length_three_relation_has_a_trace():
    rules = [(r.lhs, r.rhs) for r in SIX]
    for r in enumerate_relations(FINGEN_ARRAY, 3):
        tr = reduces_over_shorter(FINGEN_ARRAY, r, 2)
        assert tr is not None and tr.check(FINGEN_ARRAY)
        assert connected_by_rewriting(r.lhs, r.rhs, rules)


def test_traces_preserve_length_and_weight():
    system = RewriteSystem(FINGEN_ARRAY, 2)
    for r in enumerate_relations(FINGEN_ARRAY, 4)[:200]:
        tr = system.trace(r.lhs, r.rhs)
        ws = tr.words()
        assert {len(w) for w in ws} == {4}
        assert len({log_sigma(FINGEN_COL, 2, w) for w in ws}) == 1


def test_components_agree_with_word_bfs():
    rules = [(r.lhs, r.rhs) for r in SIX]
    comp = RewriteSystem(FINGEN_ARRAY, 2).components(3)
    words = all_words(4, 3)
    for u, v in combinations(words[:40], 2):
        assert (comp[u] == comp[v]) == connected_by_rewriting(u, v, rules)


def test_infgen_irreducible_n4():
    pair = B((2, 3, 3, 3, 3, 2), (1, 2, 3, 1, 2, 3))
    assert reduces_over_shorter(INFGEN_ARRAY, pair, 5) is None


@pytest.mark.parametrize("n", [4, 6, 8])
def test_infgen_witness(n):
    c = infgen_witness(n)
    assert c.passed and c.member and c.delta_value == 0
    assert c.length == n + 2
    assert c.tail_coefficient == 5
    # direct evaluation by the oracle
    assert log_sigma(INFGEN_COL, 2, c.difference.lhs) == log_sigma(INFGEN_COL, 2, c.difference.rhs)
    assert closed_form_delta(n, 5) == (c.delta.coefficients, 0)
    assert c.closed_form_values[4] == -(2 ** (n - 1))
    assert len(c.notes) == 1 and "tail coefficient 4" in c.notes[0]


def test_infgen_n6_coefficients():
    c = infgen_witness(6)
    d = c.delta.coefficients
    assert d == (2, 3, 0, 3, 0, 5, 3, -3)
    assert sum(2 ** k * a for k, a in enumerate(d)) == 0


def test_infgen_n10_membership_only():
    lhs = (2,) + (3,) * 10 + (2,)
    rhs = (1,) + (2, 3) * 4 + (1, 2, 3)
    assert member_loglin(INFGEN_ARRAY, B(lhs, rhs))


@pytest.mark.parametrize("n", [5, 2, 0])
def test_infgen_bad_n(n):
    with pytest.raises(ValueError):
        infgen_witness(n)


def test_solver_parity_and_witness():
    al = difference_alphabet(FINGEN_ARRAY)
    for m in (1, 3, 6):
        assert solvable_weighted_sum(3, m, al, 2).verdict == "unsolvable-by-parity"
        assert solvable_weighted_sum(5, m, al, 2).verdict == "unsolvable-by-parity"
    r = solvable_weighted_sum(2, 1, al, 2)
    assert r.solvable and r.witness == (1,)
    assert solvable_weighted_sum(100, 2, al, 2).verdict == "unsolvable-by-bound"
    assert solvable_weighted_sum(Fraction(1, 2), 2, al, 2).solvable is False


def test_solver_non_integral_falls_back():
    al = difference_alphabet(LogLinearArray((Fraction(1, 2), 1), 2))
    r = solvable_weighted_sum(1, 1, al, 2)
    assert r.solvable and r.witness == (Fraction(1, 2),)
    assert solvable_weighted_sum(3, 1, al, 2).verdict == "unsolvable-by-bound"
    assert solvable_weighted_sum(Fraction(3, 2), 2, al, 2).verdict == "unsolvable-exhaustive"


@settings(max_examples=40)
@given(st.lists(st.sampled_from([-2, -1, 0, 1, 2]), min_size=1, max_size=4),
       st.sampled_from([2, 3, Fraction(1, 2)]))
def test_solver_finds_constructed_sums(coeffs, d):
    al = difference_alphabet((1, 2, 3))
    target = sum(Fraction(d) ** (i + 1) * a for i, a in enumerate(coeffs))
    r = solvable_weighted_sum(target, len(coeffs), al, d)
    assert r.solvable
    assert sum(Fraction(d) ** (i + 1) * a for i, a in enumerate(r.witness)) == target


def test_verify_fingen():
    rep = verify_fingen(FINGEN_ARRAY, 5)
    assert rep.passed and rep.counterexample is None
    counts = {n: s["differences"] for n, s in rep.per_length.items()}
    assert counts[2] == 6
    for n in (3, 4):
        assert counts[n] == len(brute_relations(FINGEN_COL, n))
    bad = verify_fingen(INFGEN_ARRAY, 6)
    assert not bad.passed and bad.counterexample is not None


def test_verify_appendix():
    assert verify_appendix(2).passed
    rep = verify_appendix(4)
    assert rep.passed and rep.relations == SIX
    case = next(c for c in rep.cases if c.lhs_prefix == (1, 1) and c.rhs_prefix == (3, 3))
    assert case.status == "blocked"
    assert case.solve.verdict == "unsolvable-by-parity" and case.tail_target == 3
    statuses = Counter(c.status for c in rep.cases)
    assert statuses["unreduced"] == 0
    with pytest.raises(ValueError):
        verify_appendix(3, INFGEN_ARRAY)


@settings(max_examples=30)
@given(st.lists(st.integers(1, 6), min_size=3, max_size=3, unique=True),
       st.lists(st.integers(1, 3), min_size=3, max_size=3).map(tuple),
       st.lists(st.integers(1, 3), min_size=3, max_size=3).map(tuple))
def test_membership_matches_delta(col, u, v):
    if u == v:
        return
    A = LogLinearArray(tuple(col), 2)
    diff = B(u, v)
    assert member_loglin(A, diff) == (delta_polynomial(A, diff).value() == 0)
    assert member_loglin(A, diff) == (integer_weight(col, u) == integer_weight(col, v))
