"""Exact weight orders on free-algebra words and their weight ideals."""

from .words import (BinomialDifference, ExponentVector, exponent_vector, factors, format_word,
                    frequency, is_scattered_subword, parse_word, pretty_word, support)
from .arrays import (ArraySpecError, ExplicitArray, LogLinearArray, RegularArray, Weight,
                     check_admissible_bounded, is_degenerate, load_array_spec,
                     parse_array_spec, reduce_degenerate, weight)
from .order import Outcome, classify_lenlex, compare, compare_lenlex, orders_equivalent_bounded
from .ideal_regular import (Decomposition, GeneratorSet, NotInIdealError, ResourceLimitError,
                            Term, decompose, enumerate_disjoint, enumerate_fibers,
                            is_consequence, is_pairwise_coprime, member, minimal_generators)
from .ideal_loglinear import (FINGEN_ARRAY, INFGEN_ARRAY, delta_polynomial, difference_alphabet,
                              enumerate_relations, infgen_witness, member_loglin,
                              reduces_over_shorter, solvable_weighted_sum, verify_appendix,
                              verify_fingen)

__version__ = "0.1.0"
