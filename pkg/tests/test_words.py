import pytest
from hypothesis import given, strategies as st

from weightideals import (BinomialDifference, ExponentVector, exponent_vector, factors,
                          format_word, frequency, is_scattered_subword, parse_word,
                          pretty_word, support)
from weightideals.words import check_letters

words = st.lists(st.integers(1, 4), max_size=8).map(tuple)


def test_parse_and_format_roundtrip():
    assert parse_word("3 2 3 2") == (3, 2, 3, 2)
    assert parse_word("  ") == ()
    assert format_word((4, 1)) == "4 1"
    assert pretty_word((4, 1)) == "x4x1"
    assert pretty_word(()) == "1"


@pytest.mark.parametrize("bad", ["0", "-1", "x1", "1.5"])
def test_parse_rejects_bad_letters(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_check_letters_range():
    check_letters((1, 3), 3)
    with pytest.raises(ValueError):
        check_letters((1, 4), 3)


def test_support_and_frequency():
    assert support((3, 2, 3)) == {2, 3}
    assert frequency(3, (3, 2, 3)) == 2
    with pytest.raises(ValueError):
        support(())


def test_scattered_subword_examples():
    assert is_scattered_subword((1, 3), (1, 2, 3))
    assert not is_scattered_subword((3, 1), (1, 2, 3))
    assert is_scattered_subword((), (2,))


def test_factors():
    assert factors((1, 2, 3), 2) == [(0, (1, 2)), (1, (2, 3))]
    with pytest.raises(ValueError):
        factors((1, 2), 3)


def test_exponent_vector_behaves_like_a_dict():
    e = exponent_vector((3, 2, 3))
    assert e == {2: 1, 3: 2}
    assert e.get(1) == 0
    assert e.degree == 3
    assert e.canonical_word() == (3, 3, 2)
    assert hash(e) == hash(ExponentVector({3: 2, 2: 1, 4: 0}))
    with pytest.raises(ValueError):
        exponent_vector((1,)) - exponent_vector((2,))


def test_binomial_difference_validation():
    g = BinomialDifference((4, 1), (3, 2))
    assert str(g) == "x4x1 - x3x2"
    assert g.is_disjoint() and not g.is_commutator()
    assert g.reversed() == BinomialDifference((3, 2), (4, 1))
    assert BinomialDifference((1, 2), (2, 1)).is_commutator()
    with pytest.raises(ValueError):
        BinomialDifference((1,), (1, 2))
    with pytest.raises(ValueError):
        BinomialDifference((1, 2), (1, 2))


@given(words, words)
def test_concatenation_adds_exponent_vectors(u, v):
    assert exponent_vector(u + v) == exponent_vector(u) + exponent_vector(v)


@given(words, st.data())
def test_every_deletion_is_a_scattered_subword(w, data):
    keep = data.draw(st.lists(st.booleans(), min_size=len(w), max_size=len(w)))
    sub = tuple(x for x, k in zip(w, keep) if k)
    assert is_scattered_subword(sub, w)


@given(words, words)
def test_scattered_subword_matches_brute_force(u, w):
    from itertools import combinations
    brute = any(tuple(w[i] for i in idx) == u for idx in combinations(range(len(w)), len(u)))
    assert is_scattered_subword(u, w) == brute


@given(words)
def test_canonical_word_has_same_exponents(w):
    e = exponent_vector(w)
    assert exponent_vector(e.canonical_word()) == e
