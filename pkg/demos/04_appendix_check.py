"""
Prefix case analysis for log column 2 3 4 6
===========================================

Each pair of two-letter prefixes either cannot be completed to a relation
(the weighted-sum solver says why) or every completion reduces to
length-2 relations.
"""

from collections import Counter

from weightideals import (FINGEN_ARRAY, difference_alphabet, pretty_word, solvable_weighted_sum,
                          verify_appendix)

report = verify_appendix(5)
print("pass" if report.passed else "fail")
print(Counter(case.status for case in report.cases))

for case in report.cases:
    if case.status == "reducible" and case.differences > 20:
        print(pretty_word(case.lhs_prefix), pretty_word(case.rhs_prefix),
              f"{case.reduced}/{case.differences}", case.sample)

# an odd target can never be a sum of even multiples of integers
alphabet = difference_alphabet(FINGEN_ARRAY)
print(solvable_weighted_sum(3, 4, alphabet, 2))
print(solvable_weighted_sum(2, 1, alphabet, 2))
