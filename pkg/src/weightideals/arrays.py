"""
Finitely described ``t x oo`` weight arrays and their weight functions.

Three families are supported, all with exact rational entries:

``RegularArray``
    rank one: column ``j`` is ``d_j`` times the first column.  The scalars
    ``d_j`` are an explicit prefix (``d_0 = 1``) followed by a geometric tail.
``LogLinearArray``
    entry ``(i, j)`` is ``exp(d**j * a_i)``.  Only the exponent is ever
    stored, since the base has no effect on comparisons.
``ExplicitArray``
    a finite list of columns, continued by multiplying the last column by a
    fixed ratio.  Mostly useful for building non-admissible arrays.

Columns are indexed from 0.  Letters are indexed from 1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .words import Word, check_letters

__all__ = [
    "ArraySpecError",
    "Weight",
    "RegularArray",
    "LogLinearArray",
    "ExplicitArray",
    "ArraySpec",
    "parse_rational",
    "format_rational",
    "parse_array_spec",
    "load_array_spec",
    "dump_array_spec",
    "weight",
    "is_degenerate",
    "reduce_degenerate",
    "AdmissibilityReport",
    "check_admissible_bounded",
    "words_of_length",
]


class ArraySpecError(ValueError):
    """Malformed or invalid array description.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ValueError(f"not a rational: {token!r}")
    return Fraction(token)


def format_rational(q) -> str:
    """Reduced ``p/q`` with positive denominator, or a bare integer."""
    return str(Fraction(q))


def _positive(values, what):
    values = tuple(Fraction(v) for v in values)
    for v in values:
        if v <= 0:
            raise ArraySpecError(f"{what} entries must be positive, got {v}")
    return values


@total_ordering
@dataclass(frozen=True)
class Weight:
    """Weight of a word.

    ``exponential=False``: ``value`` is the weight itself (regular/explicit).
    ``exponential=True``: ``value`` is the exponent of the weight (log-linear).
    Only weights of the same kind can be ordered.
    """

    value: Fraction
    exponential: bool = False

    def _check(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if other.exponential != self.exponential:
            raise TypeError("cannot compare multiplicative and exponential weights")
        return True

    def __lt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.value < other.value

    def combine(self, other: Weight) -> Weight:
        """Weight of a concatenation: product of values or sum of exponents."""
        self._check(other)
        if self.exponential:
            return Weight(self.value + other.value, True)
        return Weight(self.value * other.value, False)

    def __str__(self):
        label = "log-weight" if self.exponential else "weight"
        return f"{label} {format_rational(self.value)}"


@dataclass(frozen=True)
class RegularArray:
    first_column: tuple
    scalar_prefix: tuple = (Fraction(1),)
    scalar_tail_ratio: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "first_column", _positive(self.first_column, "first_column"))
        object.__setattr__(self, "scalar_prefix", _positive(self.scalar_prefix, "scalar_prefix"))
        object.__setattr__(self, "scalar_tail_ratio",
                           _positive([self.scalar_tail_ratio], "scalar_tail_ratio")[0])
        if not self.first_column:
            raise ArraySpecError("array needs at least one row")
        if not self.scalar_prefix or self.scalar_prefix[0] != 1:
            raise ArraySpecError("scalar_prefix must start with 1")

    @classmethod
    def linear(cls, first_column, slope) -> RegularArray:
        return cls(first_column, (Fraction(1),), Fraction(slope))

    @property
    def t(self) -> int:
        return len(self.first_column)

    def column_scalar(self, j: int) -> Fraction:
        n = len(self.scalar_prefix)
        if j < n:
            return self.scalar_prefix[j]
        return self.scalar_prefix[-1] * self.scalar_tail_ratio ** (j - n + 1)

    def entry(self, i: int, j: int) -> Fraction:
        return self.column_scalar(j) * self.first_column[i - 1]

    def letter_values(self) -> tuple:
        return self.first_column


@dataclass(frozen=True)
class LogLinearArray:
    log_first_column: tuple
    slope: Fraction

    def __post_init__(self):
        object.__setattr__(self, "log_first_column",
                           _positive(self.log_first_column, "log_first_column"))
        object.__setattr__(self, "slope", _positive([self.slope], "slope")[0])
        if not self.log_first_column:
            raise ArraySpecError("array needs at least one row")
        if self.slope == 1:
            raise ArraySpecError("log-linear slope must differ from 1")

    @property
    def t(self) -> int:
        return len(self.log_first_column)

    def log_entry(self, i: int, j: int) -> Fraction:
        return self.slope ** j * self.log_first_column[i - 1]

    def letter_values(self) -> tuple:
        return self.log_first_column


@dataclass(frozen=True)
class ExplicitArray:
    columns: tuple
    tail_ratio: Fraction = Fraction(1)

    def __post_init__(self):
        cols = tuple(_positive(c, "columns") for c in self.columns)
        if not cols or not cols[0]:
            raise ArraySpecError("explicit array needs at least one nonempty column")
        if len({len(c) for c in cols}) != 1:
            raise ArraySpecError("explicit columns have different lengths")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "tail_ratio", _positive([self.tail_ratio], "tail_ratio")[0])

    @property
    def t(self) -> int:
        return len(self.columns[0])

    def entry(self, i: int, j: int) -> Fraction:
        n = len(self.columns)
        if j < n:
            return self.columns[j][i - 1]
        return self.columns[-1][i - 1] * self.tail_ratio ** (j - n + 1)

    def letter_values(self) -> tuple:
        return self.columns[0]


ArraySpec = Union[RegularArray, LogLinearArray, ExplicitArray]


def weight(A: ArraySpec, w: Word, k: int = 0) -> Weight:
    """Shifted weight ``sigma_k(w)``: the word is read starting at column ``k``."""
    if not w:
        raise ValueError("the trivial word has no weight")
    if k < 0:
        raise ValueError("shift must be nonnegative")
    check_letters(w, A.t)
    if isinstance(A, LogLinearArray):
        d, col = A.slope, A.log_first_column
        power = d ** k
        total = Fraction(0)
        for x in w:
            total += power * col[x - 1]
            power *= d
        return Weight(total, True)
    value = Fraction(1)
    for j, x in enumerate(w):
        value *= A.entry(x, j + k)
    return Weight(value, False)


# -- text format -------------------------------------------------------------

_KEYS = {
    "regular": {"family", "first_column", "scalar_prefix", "scalar_tail_ratio"},
    "loglinear": {"family", "log_first_column", "slope"},
    "explicit": {"family", "columns", "tail_ratio"},
}
_ALL_KEYS = set().union(*_KEYS.values())


def _rationals(text, key, line):
    try:
        return [parse_rational(tok) for tok in text.split()]
    except ValueError as exc:
        raise ArraySpecError(f"{key}: {exc}", line) from None


def parse_array_spec(text: str) -> ArraySpec:
    """Parse the line-oriented ``key: value`` array description.

    Blank lines and ``#`` comments are ignored.
    """
    fields: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or not key:
            raise ArraySpecError("expected 'key: value'", lineno)
        if key not in _ALL_KEYS:
            raise ArraySpecError(f"unknown key {key!r}", lineno)
        if key in fields:
            raise ArraySpecError(f"duplicate key {key!r}", lineno)
        fields[key] = (value.strip(), lineno)

    if "family" not in fields:
        raise ArraySpecError("missing key 'family'")
    family, fline = fields["family"]
    if family not in _KEYS:
        raise ArraySpecError(f"unknown family {family!r}", fline)
    for key, (_, lineno) in fields.items():
        if key not in _KEYS[family]:
            raise ArraySpecError(f"key {key!r} not allowed for family {family}", lineno)

    def need(key):
        if key not in fields:
            raise ArraySpecError(f"family {family} requires key {key!r}")
        return fields[key]

    def scalar(key, default):
        if key not in fields:
            return default
        value, lineno = fields[key]
        vals = _rationals(value, key, lineno)
        if len(vals) != 1:
            raise ArraySpecError(f"{key} takes a single rational", lineno)
        return vals[0]

    if family == "regular":
        value, lineno = need("first_column")
        col = _rationals(value, "first_column", lineno)
        prefix = [Fraction(1)]
        if "scalar_prefix" in fields:
            pv, pline = fields["scalar_prefix"]
            prefix = _rationals(pv, "scalar_prefix", pline)
        return RegularArray(tuple(col), tuple(prefix),
                            scalar("scalar_tail_ratio", Fraction(1)))
    if family == "loglinear":
        value, lineno = need("log_first_column")
        col = _rationals(value, "log_first_column", lineno)
        if "slope" not in fields:
            raise ArraySpecError("family loglinear requires key 'slope'")
        return LogLinearArray(tuple(col), scalar("slope", None))
    value, lineno = need("columns")
    cols = [_rationals(c, "columns", lineno) for c in value.split(";")]
    return ExplicitArray(tuple(map(tuple, cols)), scalar("tail_ratio", Fraction(1)))


def load_array_spec(path) -> ArraySpec:
    with open(path, encoding="utf-8") as fh:
        return parse_array_spec(fh.read())


def dump_array_spec(A: ArraySpec) -> str:
    fmt = lambda vals: " ".join(map(format_rational, vals))  # noqa: E731
    if isinstance(A, RegularArray):
        lines = ["family: regular", f"first_column: {fmt(A.first_column)}"]
        if len(A.scalar_prefix) > 1:
            lines.append(f"scalar_prefix: {fmt(A.scalar_prefix)}")
        lines.append(f"scalar_tail_ratio: {format_rational(A.scalar_tail_ratio)}")
    elif isinstance(A, LogLinearArray):
        lines = ["family: loglinear", f"log_first_column: {fmt(A.log_first_column)}",
                 f"slope: {format_rational(A.slope)}"]
    else:
        lines = ["family: explicit", "columns: " + "; ".join(fmt(c) for c in A.columns),
                 f"tail_ratio: {format_rational(A.tail_ratio)}"]
    return "\n".join(lines) + "\n"


# -- degeneracy --------------------------------------------------------------

def is_degenerate(A: ArraySpec) -> tuple[int, int] | None:
    """First pair ``(i, j)``, ``i < j``, of letters with equal single-letter weight."""
    vals = A.letter_values()
    for i, j in itertools.combinations(range(len(vals)), 2):
        if vals[i] == vals[j]:
            return (i + 1, j + 1)
    return None


def reduce_degenerate(A: ArraySpec) -> tuple[ArraySpec, dict[int, int]]:
    """Delete later rows that repeat an earlier first-column entry.

    Returns the reduced array and a map from old letter to new letter.
    """
    vals = A.letter_values()
    keep: list[int] = []
    mapping: dict[int, int] = {}
    for i, v in enumerate(vals):
        for n, kept in enumerate(keep):
            if vals[kept] == v:
                mapping[i + 1] = n + 1
                break
        else:
            keep.append(i)
            mapping[i + 1] = len(keep)
    if len(keep) == len(vals):
        return A, mapping
    if isinstance(A, RegularArray):
        B = RegularArray(tuple(vals[i] for i in keep), A.scalar_prefix, A.scalar_tail_ratio)
    elif isinstance(A, LogLinearArray):
        B = LogLinearArray(tuple(vals[i] for i in keep), A.slope)
    else:
        B = ExplicitArray(tuple(tuple(c[i] for i in keep) for c in A.columns), A.tail_ratio)
    return B, mapping


# -- bounded admissibility ---------------------------------------------------

def words_of_length(t: int, length: int):
    return itertools.product(range(1, t + 1), repeat=length)


def _sign(a, b) -> int:
    return (a > b) - (a < b)


def _dense_ranks(values: list) -> list[int]:
    order = sorted(set(values))
    rank = {v: r for r, v in enumerate(order)}
    return [rank[v] for v in values]


@dataclass(frozen=True)
class AdmissibilityReport:
    passed: bool
    max_len: int
    max_shift: int
    counterexample: tuple | None = None  # (w1, w2, k)

    def __bool__(self):
        return self.passed


def check_admissible_bounded(A: ArraySpec, max_len: int, max_shift: int) -> AdmissibilityReport:
    """Check that equal-length comparisons are stable under a one-column shift.

    Every pair of equal-length words of length ``<= max_len`` and every shift
    ``k < max_shift`` is checked: ``sigma_k(w1) > sigma_k(w2)`` must hold
    exactly when ``sigma_{k+1}(w1) > sigma_{k+1}(w2)``.  A counterexample
    ``(w1, w2, k)`` is oriented so that ``w1`` is the heavier word at shift
    ``k`` (or at ``k + 1`` when they tie at ``k``).
    """
    if max_len < 1 or max_shift < 0:
        raise ValueError("need max_len >= 1 and max_shift >= 0")
    for length in range(1, max_len + 1):
        words = list(words_of_length(A.t, length))
        layers = [[weight(A, w, k).value for w in words] for k in range(max_shift + 1)]
        ranks = [_dense_ranks(layer) for layer in layers]
        for k in range(max_shift):
            if ranks[k] == ranks[k + 1]:
                continue
            now, nxt = layers[k], layers[k + 1]
            for a, b in itertools.combinations(range(len(words)), 2):
                s0, s1 = _sign(now[a], now[b]), _sign(nxt[a], nxt[b])
                if s0 != s1:
                    lead = s0 if s0 else s1
                    w1, w2 = (words[a], words[b]) if lead > 0 else (words[b], words[a])
                    return AdmissibilityReport(False, max_len, max_shift, (w1, w2, k))
    return AdmissibilityReport(True, max_len, max_shift)
