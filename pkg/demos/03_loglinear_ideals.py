"""
Weight ideals of log-linear arrays
==================================

Positions now matter: a relation is a pair of words whose exponent sums
agree, and shorter relations act by replacing factors.
"""

from weightideals import (FINGEN_ARRAY, INFGEN_ARRAY, BinomialDifference, delta_polynomial,
                          enumerate_relations, infgen_witness, reduces_over_shorter,
                          verify_fingen)

for r in enumerate_relations(FINGEN_ARRAY, 2):
    print(r)

trace = reduces_over_shorter(FINGEN_ARRAY, BinomialDifference((1, 1, 3), (4, 1, 2)))
print(trace)

report = verify_fingen(FINGEN_ARRAY, 5)
print("length-2 relations generate up to length 5:", report.passed)
for length, stats in report.per_length.items():
    print(" ", length, stats)

# log column 2 4 7: one new relation is needed at every even length
for n in (4, 6):
    cert = infgen_witness(n)
    print(cert.difference)
    print("  delta", delta_polynomial(INFGEN_ARRAY, cert.difference), "=", cert.delta_value)
    print("  irreducible:", cert.reduction is None)
    for note in cert.notes:
        print("  note:", note)
