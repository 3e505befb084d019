"""
Words in the free monoid on letters ``1..t``.

A word is a plain tuple of 1-based letter indices, ``(3, 2, 3, 2)`` standing
for x3x2x3x2.  The empty tuple is the trivial word; it only ever appears as
a left or right multiplier.

Text form is whitespace separated indices, so ``"3 2 3 2"``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

__all__ = [
    "Word",
    "BinomialDifference",
    "ExponentVector",
    "parse_word",
    "format_word",
    "pretty_word",
    "check_letters",
    "support",
    "frequency",
    "is_scattered_subword",
    "factors",
    "exponent_vector",
]

Word = tuple  # tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse ``"3 2 3 2"`` into ``(3, 2, 3, 2)``.  Blank text is the empty word."""
    letters = []
    for token in text.split():
        try:
            x = int(token)
        except ValueError:
            raise ValueError(f"bad letter {token!r} in word {text!r}") from None
        if x < 1:
            raise ValueError(f"letter indices start at 1, got {x}")
        letters.append(x)
    return tuple(letters)


def format_word(w: Word) -> str:
    return " ".join(map(str, w))


def pretty_word(w: Word) -> str:
    """``(3, 2)`` -> ``'x3x2'``; the empty word prints as ``'1'``."""
    if not w:
        return "1"
    return "".join(f"x{x}" for x in w)


def check_letters(w: Word, t: int) -> None:
    for x in w:
        if not 1 <= x <= t:
            raise ValueError(f"letter x{x} outside 1..{t}")


def support(w: Word) -> set[int]:
    if not w:
        raise ValueError("trivial word has no support")
    return set(w)


def frequency(x: int, w: Word) -> int:
    return w.count(x)


def is_scattered_subword(u: Word, w: Word) -> bool:
    # greedy left-to-right matching is optimal for subsequence tests
    it = iter(w)
    return all(x in it for x in u)


def factors(w: Word, length: int) -> list[tuple[int, Word]]:
    """All contiguous subwords of the given length, with start positions."""
    if not 1 <= length <= len(w):
        raise ValueError(f"factor length {length} outside 1..{len(w)}")
    return [(p, tuple(w[p:p + length])) for p in range(len(w) - length + 1)]


class ExponentVector(Mapping):
    """Commutative image of a word: letter -> multiplicity (zero counts dropped).

    Hashable, so it can live in sets; compares equal to an ordinary dict with
    the same items.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = dict(counts)
        for x, c in items.items():
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for x{x}")
        self._items = tuple(sorted((x, c) for x, c in items.items() if c))
        self._hash = hash(self._items)

    @classmethod
    def of(cls, w: Word) -> ExponentVector:
        counts: dict[int, int] = {}
        for x in w:
            counts[x] = counts.get(x, 0) + 1
        return cls(counts)

    def __getitem__(self, x: int) -> int:
        for y, c in self._items:
            if y == x:
                return c
        raise KeyError(x)

    def get(self, x, default=0):
        return dict(self._items).get(x, default)

    def __iter__(self) -> Iterator[int]:
        return (x for x, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other):
        if isinstance(other, ExponentVector):
            return self._items == other._items
        return super().__eq__(other)

    def __repr__(self) -> str:
        return f"ExponentVector({dict(self._items)})"

    def __add__(self, other: ExponentVector) -> ExponentVector:
        counts = dict(self._items)
        for x, c in other.items():
            counts[x] = counts.get(x, 0) + c
        return ExponentVector(counts)

    def __sub__(self, other: ExponentVector) -> ExponentVector:
        """Componentwise difference; raises if any multiplicity would go negative."""
        counts = dict(self._items)
        for x, c in other.items():
            counts[x] = counts.get(x, 0) - c
        return ExponentVector(counts)

    def dominates(self, other: ExponentVector) -> bool:
        mine = dict(self._items)
        return all(mine.get(x, 0) >= c for x, c in other.items())

    @property
    def degree(self) -> int:
        return sum(c for _, c in self._items)

    def support(self) -> set[int]:
        return {x for x, _ in self._items}

    def canonical_word(self) -> Word:
        """Representative word with letters in nonincreasing index order."""
        return tuple(x for x, c in reversed(self._items) for _ in range(c))


def exponent_vector(w: Word) -> ExponentVector:
    return ExponentVector.of(w)


@dataclass(frozen=True)
class BinomialDifference:
    """The element ``lhs - rhs`` of the free algebra, for distinct equal-length words."""

    lhs: Word
    rhs: Word

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if len(self.lhs) != len(self.rhs):
            raise ValueError(
                f"words of unequal length {len(self.lhs)} and {len(self.rhs)}")
        if self.lhs == self.rhs:
            raise ValueError(f"trivial difference {pretty_word(self.lhs)} - itself")

    def __len__(self) -> int:
        return len(self.lhs)

    def __str__(self) -> str:
        return f"{pretty_word(self.lhs)} - {pretty_word(self.rhs)}"

    def reversed(self) -> BinomialDifference:
        return BinomialDifference(self.rhs, self.lhs)

    def is_disjoint(self) -> bool:
        return not set(self.lhs) & set(self.rhs)

    def is_commutator(self) -> bool:
        return len(self.lhs) == 2 and self.rhs == self.lhs[::-1]
