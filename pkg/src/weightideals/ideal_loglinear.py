"""
Weight ideals of log-linear arrays.

With log-first-column ``a_1..a_t`` and slope ``d``, a word
``x_{u_0} ... x_{u_{l-1}}`` has exponent ``sum_k d**k * a_{u_k}``.  Unlike the
regular case the position of each letter matters, so relations are between
words rather than commutative monomials.

A difference ``w1 - w2`` follows from a set of shorter relations exactly when
``w1`` can be rewritten into ``w2`` by replacing factors with equal-weight
factors of those lengths.  Membership is invariant under shifting, so such a
replacement never changes the weight of the surrounding word.  Weight classes
are finite for each length, which makes reducibility decidable by search.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .arrays import LogLinearArray, format_rational, is_degenerate, weight, words_of_length
from .ideal_regular import NotInIdealError, ResourceLimitError
from .words import BinomialDifference, Word, check_letters, pretty_word

__all__ = [
    "FINGEN_ARRAY",
    "INFGEN_ARRAY",
    "DEFAULT_WORD_CAP",
    "DeltaPolynomial",
    "delta_polynomial",
    "DifferenceAlphabet",
    "difference_alphabet",
    "member_loglin",
    "weight_classes",
    "enumerate_relations",
    "RewriteStep",
    "RewriteTrace",
    "RewriteSystem",
    "reduces_over_shorter",
    "InfGenCertificate",
    "closed_form_delta",
    "infgen_witness",
    "SolveResult",
    "solvable_weighted_sum",
    "FinGenReport",
    "verify_fingen",
    "PrefixCase",
    "AppendixReport",
    "verify_appendix",
]

# nontrivial ideal generated by its length-2 relations
FINGEN_ARRAY = LogLinearArray((2, 3, 4, 6), 2)
# nontrivial ideal with no finite generating set
INFGEN_ARRAY = LogLinearArray((2, 4, 7), 2)

DEFAULT_WORD_CAP = 1_000_000


def _require_loglinear(A):
    if not isinstance(A, LogLinearArray):
        raise TypeError("expected a log-linear array")


def _exponent(A: LogLinearArray, w: Word) -> Fraction:
    return weight(A, w).value


@dataclass(frozen=True)
class DeltaPolynomial:
    """``sum_k d**k * c_k`` where ``c_k`` is the log-entry difference at position ``k``."""

    coefficients: tuple
    slope: Fraction

    def value(self, shift: int = 0) -> Fraction:
        d = self.slope
        return sum((d ** (k + shift) * c for k, c in enumerate(self.coefficients)), Fraction(0))

    def __str__(self):
        return " + ".join(f"{format_rational(self.slope)}^{k}*({format_rational(c)})"
                          for k, c in enumerate(self.coefficients))


def delta_polynomial(A: LogLinearArray, diff: BinomialDifference) -> DeltaPolynomial:
    _require_loglinear(A)
    check_letters(diff.lhs + diff.rhs, A.t)
    col = A.log_first_column
    return DeltaPolynomial(tuple(col[u - 1] - col[v - 1] for u, v in zip(diff.lhs, diff.rhs)),
                           A.slope)


@dataclass(frozen=True)
class DifferenceAlphabet:
    values: frozenset

    def __contains__(self, q):
        return Fraction(q) in self.values

    def __iter__(self):
        return iter(sorted(self.values))

    @property
    def max_abs(self) -> Fraction:
        return max(abs(v) for v in self.values)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)


def difference_alphabet(A_or_column) -> DifferenceAlphabet:
    col = A_or_column.log_first_column if isinstance(A_or_column, LogLinearArray) else A_or_column
    col = [Fraction(a) for a in col]
    return DifferenceAlphabet(frozenset(a - b for a in col for b in col))


def member_loglin(A: LogLinearArray, diff: BinomialDifference) -> bool:
    return delta_polynomial(A, diff).value() == 0


def weight_classes(A: LogLinearArray, length: int, cap: int = DEFAULT_WORD_CAP) -> dict:
    """``{exponent: sorted words}`` over all words of the given length."""
    _require_loglinear(A)
    if length < 1:
        raise ValueError("length must be >= 1")
    if A.t ** length > cap:
        raise ResourceLimitError(f"{A.t}**{length} words exceeds cap {cap}")
    classes: dict = {}
    for w in words_of_length(A.t, length):
        classes.setdefault(_exponent(A, w), []).append(w)
    return classes


def enumerate_relations(A: LogLinearArray, length: int,
                        cap: int = DEFAULT_WORD_CAP) -> list[BinomialDifference]:
    """Every unordered pair of distinct equal-weight words of the given length.

    Ordered by increasing exponent, then lexicographically; the smaller word
    of each pair is on the left.
    """
    classes = weight_classes(A, length, cap)
    out = []
    for e in sorted(classes):
        for u, v in itertools.combinations(classes[e], 2):
            out.append(BinomialDifference(u, v))
    return out


# -- rewriting ----------------------------------------------------------------

@dataclass(frozen=True)
class RewriteStep:
    word: Word          # word after the step
    rule: BinomialDifference  # factor rule.lhs replaced by rule.rhs
    position: int


@dataclass(frozen=True)
class RewriteTrace:
    start: Word
    end: Word
    chain: tuple  # of RewriteStep

    def __len__(self):
        return len(self.chain)

    def words(self) -> list:
        return [self.start] + [s.word for s in self.chain]

    def check(self, A: LogLinearArray) -> bool:
        """Every step replaces one factor by an equal-weight factor."""
        prev = self.start
        e0 = _exponent(A, prev)
        for step in self.chain:
            f, g, p = step.rule.lhs, step.rule.rhs, step.position
            if prev[p:p + len(f)] != f:
                return False
            if step.word != prev[:p] + g + prev[p + len(f):]:
                return False
            if not member_loglin(A, step.rule) or _exponent(A, step.word) != e0:
                return False
            prev = step.word
        return prev == self.end

    def __str__(self):
        return " <-> ".join(pretty_word(w) for w in self.words())


class RewriteSystem:
    """Factor replacement by equal-weight words of length ``<= max_gen_len``."""

    def __init__(self, A: LogLinearArray, max_gen_len: int, cap: int = DEFAULT_WORD_CAP):
        _require_loglinear(A)
        if max_gen_len < 1:
            raise ValueError("max_gen_len must be >= 1")
        self.A = A
        self.max_gen_len = max_gen_len
        self.cap = cap
        self._classes: dict[int, dict] = {}

    def partners(self, f: Word) -> list:
        """Words of the same length and weight as ``f``, other than ``f``."""
        m = len(f)
        if m not in self._classes:
            self._classes[m] = weight_classes(self.A, m, self.cap)
        return [g for g in self._classes[m][_exponent(self.A, f)] if g != f]

    def rewrites(self, w: Word):
        """``(new word, rule, position)`` for every single rewrite of ``w``."""
        out = []
        for m in range(1, min(self.max_gen_len, len(w)) + 1):
            for p in range(len(w) - m + 1):
                f = w[p:p + m]
                for g in self.partners(f):
                    out.append((w[:p] + g + w[p + m:], BinomialDifference(f, g), p))
        out.sort(key=lambda r: (r[0], r[2], r[1].rhs))
        return out

    def trace(self, start: Word, goal: Word) -> RewriteTrace | None:
        """Shortest rewrite chain, exploring lexicographically smaller words first."""
        if start == goal:
            return RewriteTrace(start, goal, ())
        parent = {start: None}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for nxt, rule, p in self.rewrites(w):
                if nxt in parent:
                    continue
                parent[nxt] = (w, rule, p)
                if nxt == goal:
                    steps = []
                    node = nxt
                    while parent[node] is not None:
                        prev, r, q = parent[node]
                        steps.append(RewriteStep(node, r, q))
                        node = prev
                    return RewriteTrace(start, goal, tuple(reversed(steps)))
                queue.append(nxt)
        return None

    def components(self, length: int) -> dict:
        """Map each word of the given length to a component representative."""
        if self.A.t ** length > self.cap:
            raise ResourceLimitError(f"{self.A.t}**{length} words exceeds cap {self.cap}")
        parent: dict = {}

        def find(x):
            root = x
            while parent.setdefault(root, root) != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        for w in words_of_length(self.A.t, length):
            rw = find(w)
            for m in range(1, min(self.max_gen_len, length) + 1):
                for p in range(length - m + 1):
                    for g in self.partners(w[p:p + m]):
                        rn = find(w[:p] + g + w[p + m:])
                        if rn != rw:
                            if rn < rw:
                                rw, rn = rn, rw
                            parent[rn] = rw
        return {w: find(w) for w in words_of_length(self.A.t, length)}


def reduces_over_shorter(A: LogLinearArray, diff: BinomialDifference,
                         max_gen_len: int | None = None,
                         cap: int = DEFAULT_WORD_CAP) -> RewriteTrace | None:
    """A rewrite chain from ``diff.lhs`` to ``diff.rhs`` using relations of
    length ``<= max_gen_len`` (default: one less than the difference), or
    None when the two words lie in different components.
    """
    _require_loglinear(A)
    if not member_loglin(A, diff):
        raise NotInIdealError(f"{diff} is not in the weight ideal")
    if max_gen_len is None:
        max_gen_len = len(diff) - 1
    if not 1 <= max_gen_len < len(diff):
        raise ValueError(f"max_gen_len must lie in 1..{len(diff) - 1}")
    return RewriteSystem(A, max_gen_len, cap).trace(diff.lhs, diff.rhs)


# -- the family with no finite generating set ---------------------------------

def _infgen_pair(n: int) -> BinomialDifference:
    lhs = (2,) + (3,) * n + (2,)
    rhs = (1,) + (2, 3) * ((n - 2) // 2) + (1, 2, 3)
    return BinomialDifference(lhs, rhs)


def closed_form_delta(n: int, tail_coefficient) -> tuple[tuple, Fraction]:
    """Coefficients and base-2 value of the pattern ``2, 3, 0, 3, 0, ..., c, 3, -3``.

    Position 0 holds 2, positions ``1..l-4`` alternate 3 and 0, and the last
    three positions hold ``c, 3, -3`` with ``l = n + 2``.
    """
    length = n + 2
    coeffs = [Fraction(2)]
    coeffs += [Fraction(3 if k % 2 else 0) for k in range(1, length - 3)]
    coeffs += [Fraction(tail_coefficient), Fraction(3), Fraction(-3)]
    return tuple(coeffs), DeltaPolynomial(tuple(coeffs), Fraction(2)).value()


@dataclass
class InfGenCertificate:
    n: int
    difference: BinomialDifference
    delta: DeltaPolynomial
    delta_value: Fraction
    member: bool
    factor_class_sizes: dict      # factor -> number of words of its length and weight
    factors_isolated: bool
    reduction: RewriteTrace | None
    tail_coefficient: Fraction    # direct coefficient at position l-3
    closed_form_values: dict      # candidate tail coefficient -> closed-form delta value
    notes: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.difference)

    @property
    def passed(self) -> bool:
        return self.member and self.factors_isolated and self.reduction is None


def infgen_witness(n: int, A: LogLinearArray = INFGEN_ARRAY, cap: int = DEFAULT_WORD_CAP,
                   compare_tail_coefficients=(4, 5)) -> InfGenCertificate:
    """Certify that ``x2 x3^n x2 - x1 (x2x3)^((n-2)/2) x1x2x3`` is in the ideal
    but does not follow from any shorter relation.

    ``compare_tail_coefficients`` lists constants to try at position ``l-3``
    of the closed-form coefficient pattern; each is evaluated independently
    and recorded, and any that disagrees with direct evaluation is noted.
    """
    if A != INFGEN_ARRAY:
        raise ValueError("the witness family is specific to log column (2, 4, 7) with slope 2")
    if not isinstance(n, int) or n < 4 or n % 2:
        raise ValueError(f"n must be an even integer >= 4, got {n}")
    diff = _infgen_pair(n)
    delta = delta_polynomial(A, diff)
    value = delta.value()
    is_member = member_loglin(A, diff)

    sizes = {}
    for m in range(2, len(diff)):
        classes = weight_classes(A, m, cap)
        for f in sorted({diff.lhs[p:p + m] for p in range(len(diff) - m + 1)}):
            sizes[f] = len(classes[_exponent(A, f)])
    isolated = all(s == 1 for s in sizes.values())

    reduction = reduces_over_shorter(A, diff, len(diff) - 1, cap) if is_member else None

    tail = delta.coefficients[len(diff) - 3]
    closed = {}
    notes = []
    for c in compare_tail_coefficients:
        coeffs, v = closed_form_delta(n, c)
        closed[Fraction(c)] = v
        if coeffs != delta.coefficients:
            notes.append(f"tail coefficient {c} disagrees with direct evaluation "
                         f"({format_rational(tail)}); closed form then sums to {format_rational(v)}")
    return InfGenCertificate(n, diff, delta, value, is_member, sizes, isolated, reduction,
                             tail, closed, notes)


# -- weighted sums over the difference alphabet ------------------------------

@dataclass(frozen=True)
class SolveResult:
    verdict: str   # solvable | unsolvable-by-parity | unsolvable-by-bound | unsolvable-exhaustive | unknown
    witness: tuple | None = None
    detail: str = ""

    @property
    def solvable(self) -> bool | None:
        if self.verdict == "solvable":
            return True
        if self.verdict.startswith("unsolvable"):
            return False
        return None


def solvable_weighted_sum(target, num_positions: int, alphabet: DifferenceAlphabet, d,
                          cap: int = 200_000) -> SolveResult:
    """Decide whether ``sum_{i=1..m} d**i * a_i == target`` with every ``a_i``
    in ``alphabet``.

    For an integer alphabet and ``d = 2`` the left side is always an even
    integer, so any other target is impossible for every ``m``.  Otherwise a target outside
    ``max|a| * (d + ... + d**m)`` is impossible, and anything left is
    settled by enumerating reachable sums (``unknown`` past ``cap``).
    """
    target, d = Fraction(target), Fraction(d)
    m = num_positions
    if m < 0:
        raise ValueError("num_positions must be >= 0")
    if alphabet.is_integral() and d == 2 and (target.denominator != 1 or target.numerator % 2):
        return SolveResult("unsolvable-by-parity", None,
                           f"left side is an even integer for every length, "
                           f"target {format_rational(target)} is not")
    bound = alphabet.max_abs * sum((abs(d) ** i for i in range(1, m + 1)), Fraction(0))
    if abs(target) > bound:
        return SolveResult("unsolvable-by-bound", None,
                           f"|target| {format_rational(abs(target))} exceeds {format_rational(bound)}")
    values = sorted(alphabet.values)
    layers = [{Fraction(0): None}]
    for i in range(1, m + 1):
        power = d ** i
        nxt: dict = {}
        for s in layers[-1]:
            for a in values:
                nxt.setdefault(s + power * a, (s, a))
        if len(nxt) > cap:
            return SolveResult("unknown", None, f"more than {cap} partial sums at position {i}")
        layers.append(nxt)
    if target not in layers[-1]:
        return SolveResult("unsolvable-exhaustive", None, f"checked all sums over {m} positions")
    witness = []
    s = target
    for i in range(m, 0, -1):
        prev, a = layers[i][s]
        witness.append(a)
        s = prev
    return SolveResult("solvable", tuple(reversed(witness)))


# -- finite generation checks -------------------------------------------------

@dataclass
class FinGenReport:
    passed: bool
    max_len: int
    gen_len: int
    per_length: dict          # length -> {"classes", "differences", "unreduced"}
    counterexample: BinomialDifference | None = None


def verify_fingen(A: LogLinearArray, max_len: int, gen_len: int = 2,
                  cap: int = DEFAULT_WORD_CAP) -> FinGenReport:
    """Check that every relation of length ``<= max_len`` follows from the
    relations of length ``<= gen_len`` by factor rewriting.
    """
    _require_loglinear(A)
    if is_degenerate(A):
        raise ValueError("array is degenerate")
    system = RewriteSystem(A, gen_len, cap)
    per_length = {}
    first_bad = None
    for length in range(1, max_len + 1):
        classes = weight_classes(A, length, cap)
        big = [ws for ws in classes.values() if len(ws) > 1]
        n_diffs = sum(len(ws) * (len(ws) - 1) // 2 for ws in big)
        unreduced = 0
        if length > gen_len and big:
            comp = system.components(length)
            for ws in big:
                for u, v in itertools.combinations(ws, 2):
                    if comp[u] != comp[v]:
                        unreduced += 1
                        if first_bad is None:
                            first_bad = BinomialDifference(u, v)
        per_length[length] = {"classes": len(big), "differences": n_diffs, "unreduced": unreduced}
    return FinGenReport(first_bad is None, max_len, gen_len, per_length, first_bad)


@dataclass
class PrefixCase:
    """Relations whose words start with two given (distinct-first-letter) prefixes."""

    lhs_prefix: Word
    rhs_prefix: Word
    tail_target: Fraction         # required value of sum_{i>=1} d**i * a_{i+1}
    solve: SolveResult
    differences: int = 0          # relations with these prefixes, lengths 3..max_len
    reduced: int = 0
    sample: RewriteTrace | None = None

    @property
    def status(self) -> str:
        if self.solve.solvable is False:
            return "blocked"
        if self.differences == 0:
            return "empty"
        return "reducible" if self.reduced == self.differences else "unreduced"


@dataclass
class AppendixReport:
    passed: bool
    fingen: FinGenReport
    relations: list
    cases: list


def verify_appendix(max_len: int, A: LogLinearArray = FINGEN_ARRAY,
                    cap: int = DEFAULT_WORD_CAP) -> AppendixReport:
    """Machine check that the length-2 relations generate the ideal of the
    log column ``(2, 3, 4, 6)`` with slope 2, up to ``max_len``.

    Besides the exhaustive component check, every pair of two-letter
    prefixes with different first letters is classified: either the
    remaining positions cannot balance the weight equation (certified by the
    weighted-sum solver), or every relation with those prefixes is reduced
    and one sample rewrite chain is recorded.
    """
    if A != FINGEN_ARRAY:
        raise ValueError("this check is specific to log column (2, 3, 4, 6) with slope 2")
    fingen = verify_fingen(A, max_len, 2, cap)
    relations = enumerate_relations(A, 2, cap)
    alphabet = difference_alphabet(A)
    col, d = A.log_first_column, A.slope
    system = RewriteSystem(A, 2, cap)

    cases: dict = {}
    for p in words_of_length(A.t, 2):
        for q in words_of_length(A.t, 2):
            if p[0] >= q[0]:
                continue
            a0, a1 = col[p[0] - 1] - col[q[0] - 1], col[p[1] - 1] - col[q[1] - 1]
            target = -(a0 + d * a1) / d
            solve = solvable_weighted_sum(target, max(max_len - 2, 0), alphabet, d)
            cases[(p, q)] = PrefixCase(p, q, target, solve)

    for length in range(3, max_len + 1):
        comp = system.components(length)
        for ws in weight_classes(A, length, cap).values():
            for u, v in itertools.combinations(ws, 2):
                if u[0] == v[0]:
                    continue
                key = (u[:2], v[:2]) if u[0] < v[0] else (v[:2], u[:2])
                case = cases[key]
                case.differences += 1
                if comp[u] == comp[v]:
                    case.reduced += 1
                    if case.sample is None:
                        lo, hi = (u, v) if u[0] < v[0] else (v, u)
                        case.sample = system.trace(lo, hi)

    ordered = [cases[k] for k in sorted(cases)]
    consistent = all(c.differences == 0 for c in ordered if c.solve.solvable is False)
    return AppendixReport(fingen.passed and consistent, fingen, relations, ordered)
