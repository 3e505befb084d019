"""
Weight ideals of regular (rank one) arrays.

For a regular array, equal-length comparisons only see the first column:
the column scalars are common to both sides and cancel.  Membership of a
pure difference is therefore equality of first-column products, which only
depends on the commutative image of each word.  Commutators always lie in
the ideal, so everything reduces to fibers of commutative monomials with
equal product, and to moves between them.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .arrays import RegularArray
from .words import BinomialDifference, ExponentVector, Word, exponent_vector, pretty_word

__all__ = [
    "ResourceLimitError",
    "NotInIdealError",
    "DEFAULT_CAP",
    "first_column_of",
    "product_weight",
    "member",
    "Fiber",
    "enumerate_fibers",
    "enumerate_disjoint",
    "GeneratorSet",
    "is_consequence",
    "minimal_generators",
    "Term",
    "Decomposition",
    "expand",
    "decompose",
    "is_pairwise_coprime",
]

DEFAULT_CAP = 2_000_000


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed the configured size cap."""


class NotInIdealError(ValueError):
    """The difference is not in the weight ideal."""


def first_column_of(A) -> tuple:
    """Accept a RegularArray or a bare sequence of positive rationals."""
    if isinstance(A, RegularArray):
        return A.first_column
    col = tuple(Fraction(a) for a in A)
    if not col or any(a <= 0 for a in col):
        raise ValueError("first column must be a nonempty list of positive rationals")
    return col


def product_weight(first_column, w: Word) -> Fraction:
    col = first_column_of(first_column)
    value = Fraction(1)
    for x in w:
        value *= col[x - 1]
    return value


def member(first_column, diff: BinomialDifference) -> bool:
    col = first_column_of(first_column)
    return product_weight(col, diff.lhs) == product_weight(col, diff.rhs)


@dataclass(frozen=True)
class Fiber:
    degree: int
    weight: Fraction
    members: frozenset  # of ExponentVector

    def __len__(self):
        return len(self.members)


def _guard(t: int, degree: int, cap: int) -> None:
    size = math.comb(t + degree - 1, degree)
    if size > cap:
        raise ResourceLimitError(
            f"{size} monomials of degree {degree} in {t} letters exceeds cap {cap}")


def enumerate_fibers(first_column, degree: int, cap: int = DEFAULT_CAP) -> list[Fiber]:
    """All degree-``l`` commutative monomials grouped by first-column product."""
    col = first_column_of(first_column)
    if degree < 1:
        raise ValueError("degree must be >= 1")
    _guard(len(col), degree, cap)
    groups: dict[Fraction, list[ExponentVector]] = {}
    for combo in itertools.combinations_with_replacement(range(1, len(col) + 1), degree):
        groups.setdefault(math.prod(col[x - 1] for x in combo), []).append(exponent_vector(combo))
    return [Fiber(degree, w, frozenset(groups[w])) for w in sorted(groups)]


def _oriented(u: Word, v: Word) -> BinomialDifference:
    return BinomialDifference(u, v) if u > v else BinomialDifference(v, u)


def enumerate_disjoint(first_column, degree: int, cap: int = DEFAULT_CAP) -> list[BinomialDifference]:
    """One representative per pair of same-fiber monomials with disjoint supports.

    Words are written with letters in nonincreasing index order, and the
    lexicographically larger word goes on the left.
    """
    if degree < 2:
        raise ValueError("disjoint differences need degree >= 2")
    out = []
    for fib in enumerate_fibers(first_column, degree, cap):
        if len(fib) < 2:
            continue
        reps = sorted(e.canonical_word() for e in fib.members)
        pairs = [_oriented(u, v) for u, v in itertools.combinations(reps, 2)
                 if not set(u) & set(v)]
        out.extend(sorted(pairs, key=lambda g: (g.lhs, g.rhs)))
    return out


@dataclass
class GeneratorSet:
    """Commutators (implicit) plus disjoint-support differences.

    ``max_len_certified`` is the largest length for which the list is known
    to contain every minimal difference; nothing is claimed beyond it.
    """

    disjoint_minimal: list = field(default_factory=list)
    max_len_certified: int = 0

    def __iter__(self):
        return iter(self.disjoint_minimal)

    def __len__(self):
        return len(self.disjoint_minimal)

    def shorter_than(self, length: int) -> list:
        return [g for g in self.disjoint_minimal if len(g) < length]


def _gens(gens) -> list:
    if gens is None:
        return []
    return list(gens)


def _moves(gens):
    out = []
    for g in gens:
        a, b = exponent_vector(g.lhs), exponent_vector(g.rhs)
        out.append((g, a, b, +1))
        out.append((g, b, a, -1))
    return out


def _fiber_path(start: ExponentVector, goal: ExponentVector, gens):
    """BFS between two exponent vectors.

    Returns a list of ``(generator, sign, rest)`` moves, where a move with
    ``sign=+1`` replaces ``rest + ev(g.lhs)`` by ``rest + ev(g.rhs)`` and
    ``sign=-1`` goes the other way.  None if no path exists.
    """
    if start == goal:
        return []
    moves = _moves(gens)
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for g, take, give, sign in moves:
            if not v.dominates(take):
                continue
            rest = v - take
            nxt = rest + give
            if nxt in parent:
                continue
            parent[nxt] = (v, g, sign, rest)
            if nxt == goal:
                path = []
                node = nxt
                while parent[node] is not None:
                    prev, g_, s_, r_ = parent[node]
                    path.append((g_, s_, r_))
                    node = prev
                return path[::-1]
            queue.append(nxt)
    return None


def is_consequence(diff: BinomialDifference, gens, first_column) -> bool:
    """Whether ``diff`` follows from the commutators together with ``gens``.

    Modulo commutators only the commutative images matter, so this is
    connectivity of the two exponent vectors in the fiber graph whose edges
    swap one generator side for the other.
    """
    if not member(first_column, diff):
        raise NotInIdealError(f"{diff} is not in the weight ideal")
    path = _fiber_path(exponent_vector(diff.lhs), exponent_vector(diff.rhs), _gens(gens))
    return path is not None


def minimal_generators(first_column, max_len: int, cap: int = DEFAULT_CAP,
                       order=None) -> GeneratorSet:
    """Disjoint-support differences of length ``2..max_len`` that do not
    follow from commutators and strictly shorter differences.

    ``order`` optionally permutes the candidates within each length (any
    callable taking and returning a list); the result does not depend on it.
    """
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    found: list[BinomialDifference] = []
    for length in range(2, max_len + 1):
        shorter = list(found)
        candidates = enumerate_disjoint(first_column, length, cap)
        if order is not None:
            candidates = order(candidates)
        for diff in candidates:
            if not is_consequence(diff, shorter, first_column):
                found.append(diff)
    found.sort(key=lambda g: (len(g), g.lhs, g.rhs))
    return GeneratorSet(found, max_len)


# -- explicit decompositions -------------------------------------------------

@dataclass(frozen=True)
class Term:
    sign: int
    left: Word
    generator: BinomialDifference
    right: Word

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        left = pretty_word(self.left) if self.left else ""
        right = pretty_word(self.right) if self.right else ""
        return f"{s} {left}({self.generator}){right}"


def expand(terms) -> dict:
    """Sum ``sign * left * (lhs - rhs) * right`` in the free algebra.

    Returns ``{word: nonzero integer coefficient}``.
    """
    poly: dict = {}
    for term in terms:
        for w, c in ((term.generator.lhs, term.sign), (term.generator.rhs, -term.sign)):
            key = tuple(term.left) + tuple(w) + tuple(term.right)
            poly[key] = poly.get(key, 0) + c
    return {w: c for w, c in poly.items() if c}


@dataclass
class Decomposition:
    target: BinomialDifference
    terms: list

    def expand(self) -> dict:
        return expand(self.terms)

    def verify(self) -> bool:
        return self.expand() == {self.target.lhs: 1, self.target.rhs: -1}

    def commutator_terms(self) -> list:
        return [t for t in self.terms if t.generator.is_commutator()]

    def generator_terms(self) -> list:
        return [t for t in self.terms if not t.generator.is_commutator()]


def _commutator_term(sign, left, x, y, right) -> Term:
    # orient commutators so every commutator term carries a + sign
    if sign < 0:
        x, y = y, x
    return Term(+1, tuple(left), BinomialDifference((x, y), (y, x)), tuple(right))


def _permute(a: Word, b: Word) -> list[Term]:
    """Commutator terms summing to ``a - b`` for a rearrangement ``b`` of ``a``."""
    cur = list(a)
    terms = []
    for p, letter in enumerate(b):
        q = cur.index(letter, p)
        while q > p:
            # cur -> cur with positions q-1, q swapped
            x, y = cur[q - 1], cur[q]
            terms.append(_commutator_term(+1, cur[:q - 1], x, y, cur[q + 1:]))
            cur[q - 1], cur[q] = y, x
            q -= 1
    return terms


def _shift(terms, prefix: Word) -> list[Term]:
    return [Term(t.sign, tuple(prefix) + t.left, t.generator, t.right) for t in terms]


def _strip_common(u: Word, v: Word):
    """Pull shared letters to the front of both words with commutators.

    Returns ``(terms, prefix, u_rest, v_rest)`` with
    ``u - v = sum(terms) + prefix * (u_rest - v_rest)`` and the rests having
    disjoint supports.
    """
    terms: list[Term] = []
    prefix: list[int] = []
    u, v = list(u), list(v)
    while True:
        shared = next((x for x in u if x in v), None)
        if shared is None:
            return terms, tuple(prefix), tuple(u), tuple(v)
        u2 = [shared] + _remove_first(u, shared)
        v2 = [shared] + _remove_first(v, shared)
        # u - v = (u - u2) + (u2 - v2) - (v - v2)
        terms += _shift(_permute(tuple(u), tuple(u2)), prefix)
        terms += [_negate(t) for t in _shift(_permute(tuple(v), tuple(v2)), prefix)]
        prefix.append(shared)
        u, v = u2[1:], v2[1:]


def _remove_first(seq, x):
    out = list(seq)
    out.remove(x)
    return out


def _negate(term: Term) -> Term:
    if term.generator.is_commutator():
        g = term.generator
        return _commutator_term(-1, term.left, g.lhs[0], g.lhs[1], term.right)
    return Term(-term.sign, term.left, term.generator, term.right)


def _without(w: Word, letters: Word, from_right: bool) -> Word:
    out = list(w)
    for x in letters:
        if from_right:
            del out[len(out) - 1 - out[::-1].index(x)]
        else:
            out.remove(x)
    return tuple(out)


def _stage(cur: Word, src: Word):
    """Arrange ``cur`` as ``rest*src`` or ``src*rest`` with the fewest swaps."""
    best = None
    for from_right in (False, True):
        rest = _without(cur, src, from_right)
        for src_right in (True, False):
            staged = rest + src if src_right else src + rest
            swaps = _permute(cur, staged)
            if best is None or len(swaps) < len(best[0]):
                best = (swaps, rest, src_right)
    return best


def _chain_over_gens(u: Word, v: Word, gens) -> list[Term]:
    """Terms for ``u - v`` (disjoint, same fiber) through generator moves."""
    path = _fiber_path(exponent_vector(u), exponent_vector(v), gens)
    if path is None:
        raise NotInIdealError(f"{pretty_word(u)} - {pretty_word(v)} does not follow from the generators")
    terms: list[Term] = []
    cur = tuple(u)
    for g, sign, _ in path:
        src, dst = (g.lhs, g.rhs) if sign > 0 else (g.rhs, g.lhs)
        swaps, rest, src_right = _stage(cur, src)
        terms += swaps
        # rest*src - rest*dst = sign * rest*(lhs - rhs), likewise on the other side
        if src_right:
            terms.append(Term(sign, rest, g, ()))
            cur = rest + dst
        else:
            terms.append(Term(sign, (), g, rest))
            cur = dst + rest
    terms += _permute(cur, tuple(v))
    return terms


def decompose(first_column, diff: BinomialDifference, gens=None) -> Decomposition:
    """Write ``diff`` explicitly over commutators and the differences in ``gens``.

    Shared letters are first pulled to the front with commutators, leaving
    ``prefix * (u - v)`` with ``u`` and ``v`` of disjoint support.  That rest
    is then walked to its target along generator moves in the fiber graph,
    with commutators rearranging letters between moves.  The result is
    checked by expanding it in the free algebra.
    """
    if not member(first_column, diff):
        raise NotInIdealError(f"{diff} is not in the weight ideal")
    gens = _gens(gens)
    if diff.is_commutator():
        terms = [Term(+1, (), diff, ())]
    else:
        terms, prefix, u, v = _strip_common(diff.lhs, diff.rhs)
        if u:
            direct = [g for g in gens if (g.lhs, g.rhs) in ((u, v), (v, u))]
            if direct:
                g = direct[0]
                rest = [Term(+1 if g.lhs == u else -1, (), g, ())]
            else:
                rest = _chain_over_gens(u, v, gens)
            terms += _shift(rest, prefix)
    dec = Decomposition(diff, terms)
    if not dec.verify():
        raise AssertionError(f"decomposition of {diff} does not expand to it")
    return dec


def is_pairwise_coprime(first_column) -> bool:
    ints = []
    for a in first_column:
        q = Fraction(a)
        if q.denominator != 1 or q <= 0:
            raise ValueError(f"coprimality needs positive integer entries, got {q}")
        ints.append(q.numerator)
    return all(math.gcd(a, b) == 1 for a, b in itertools.combinations(ints, 2))
