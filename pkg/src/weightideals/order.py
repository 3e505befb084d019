"""
Length-dominant weight order, length-lexicographic orders, and bounded
comparisons between orders.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .arrays import ArraySpec, LogLinearArray, is_degenerate, weight, words_of_length
from .words import Word

__all__ = [
    "Outcome",
    "compare",
    "compare_lenlex",
    "LenLexClassification",
    "classify_lenlex",
    "EquivalenceReport",
    "orders_equivalent_bounded",
]


class Outcome(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    def flip(self) -> Outcome:
        return Outcome(-self.value)


def _outcome(a, b) -> Outcome:
    return Outcome((a > b) - (a < b))


def compare(A: ArraySpec, w1: Word, w2: Word) -> Outcome:
    """Longer words are larger; equal lengths are ordered by weight.

    ``EQ`` for distinct words means ``w1 - w2`` lies in the weight ideal.
    """
    if not w1 or not w2:
        raise ValueError("the trivial word cannot be compared")
    if len(w1) != len(w2):
        return _outcome(len(w1), len(w2))
    return _outcome(weight(A, w1), weight(A, w2))


def _lenlex_key(w: Word, side: str, rank: dict[int, int]) -> tuple:
    if side == "left":
        return tuple(rank[x] for x in w)
    if side == "right":
        return tuple(rank[x] for x in reversed(w))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _letter_rank(letter_order, letters) -> dict[int, int]:
    if letter_order is None:
        return {x: x for x in letters}
    return {x: r for r, x in enumerate(letter_order)}


def compare_lenlex(w1: Word, w2: Word, side: str = "left", letter_order=None) -> Outcome:
    """Length first, then lexicographic from the ``side`` end.

    ``letter_order`` lists the letters from smallest to largest; the default
    is the natural order ``x1 < x2 < ...``.
    """
    if len(w1) != len(w2):
        return _outcome(len(w1), len(w2))
    rank = _letter_rank(letter_order, set(w1) | set(w2))
    return _outcome(_lenlex_key(w1, side, rank), _lenlex_key(w2, side, rank))


@dataclass(frozen=True)
class LenLexClassification:
    verdict: str  # "LeftLenLex" | "RightLenLex" | "Inconclusive"
    alpha: Fraction
    beta: Fraction
    slope: Fraction
    letter_order: tuple
    hypotheses: dict = field(default_factory=dict)
    bounded_confirmation: int = 0
    diagnostics: tuple = ()


def _check_stratum(A, length, side, rank):
    """None if the weight order matches len-lex on this stratum, else a witness pair."""
    words = sorted(words_of_length(A.t, length), key=lambda w: _lenlex_key(w, side, rank))
    weights = [weight(A, w).value for w in words]
    for i in range(len(words) - 1):
        if not weights[i] < weights[i + 1]:
            return words[i], words[i + 1]
    return None


def classify_lenlex(A: ArraySpec, confirm_len: int) -> LenLexClassification:
    """Test a log-linear array against the two sufficient conditions for
    its order to be left or right length-lexicographic.

    With ``alpha``/``beta`` the smallest/largest gap between first-column
    log entries, the left test is ``d < 1 and alpha > d*beta/(1-d)`` and the
    right test is ``d > 1 and alpha > beta/(d-1)``.  A verdict other than
    ``Inconclusive`` is only returned when the analytic test holds *and*
    the weight order matches the corresponding len-lex order (with letters
    ranked by their log entries) on every stratum up to ``confirm_len``.
    """
    if not isinstance(A, LogLinearArray):
        raise TypeError("length-lexicographic classification needs a log-linear array")
    if is_degenerate(A):
        raise ValueError(f"degenerate array: letters {is_degenerate(A)} have equal weight")
    if A.t < 2:
        raise ValueError("classification needs at least two letters")
    col, d = A.log_first_column, A.slope
    gaps = [abs(a - b) for a, b in itertools.combinations(col, 2)]
    alpha, beta = min(gaps), max(gaps)
    letter_order = tuple(sorted(range(1, A.t + 1), key=lambda x: col[x - 1]))
    rank = {x: r for r, x in enumerate(letter_order)}

    left_ok = d < 1 and alpha > d * beta / (1 - d)
    right_ok = d > 1 and alpha > beta / (d - 1)
    hypotheses = {"slope_below_1": d < 1, "slope_above_1": d > 1,
                  "left_gap_condition": left_ok, "right_gap_condition": right_ok}

    diagnostics = []
    side = "left" if left_ok else "right" if right_ok else None
    if side is None:
        return LenLexClassification("Inconclusive", alpha, beta, d, letter_order,
                                    hypotheses, 0, ("gap condition fails",))
    for length in range(1, confirm_len + 1):
        bad = _check_stratum(A, length, side, rank)
        if bad is not None:
            diagnostics.append(f"length {length}: {bad[0]} vs {bad[1]} disagree with {side} len-lex")
            return LenLexClassification("Inconclusive", alpha, beta, d, letter_order,
                                        hypotheses, length - 1, tuple(diagnostics))
    verdict = "LeftLenLex" if side == "left" else "RightLenLex"
    return LenLexClassification(verdict, alpha, beta, d, letter_order, hypotheses, confirm_len)


@dataclass(frozen=True)
class EquivalenceReport:
    agree: bool
    max_len: int
    counterexample: tuple | None = None  # (w1, w2, outcome under A, outcome under B)

    def __bool__(self):
        return self.agree


def _dense_ranks(values):
    order = {v: r for r, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def orders_equivalent_bounded(A: ArraySpec, B: ArraySpec, max_len: int) -> EquivalenceReport:
    """Compare the orders of two arrays on all equal-length pairs up to ``max_len``.

    Reports the lexicographically least disagreeing pair ``w1 < w2``,
    including pairs that tie under one array only.
    """
    if A.t != B.t:
        raise ValueError(f"arrays have different numbers of rows ({A.t} vs {B.t})")
    for length in range(1, max_len + 1):
        words = list(words_of_length(A.t, length))
        wa = [weight(A, w).value for w in words]
        wb = [weight(B, w).value for w in words]
        if _dense_ranks(wa) == _dense_ranks(wb):
            continue
        for i, j in itertools.combinations(range(len(words)), 2):
            oa, ob = _outcome(wa[i], wa[j]), _outcome(wb[i], wb[j])
            if oa != ob:
                return EquivalenceReport(False, max_len, (words[i], words[j], oa, ob))
    return EquivalenceReport(True, max_len)
