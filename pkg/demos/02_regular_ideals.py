"""
Weight ideals of regular arrays
===============================

Only products of first-column entries matter, so relations come from
multisets with equal product.
"""

from weightideals import (BinomialDifference, decompose, enumerate_disjoint, enumerate_fibers,
                          is_pairwise_coprime, minimal_generators, pretty_word)

col = (2, 3, 4, 6)

for fiber in enumerate_fibers(col, 2):
    if len(fiber) > 1:
        print("weight", fiber.weight, [pretty_word(e.canonical_word()) for e in fiber.members])

print([str(g) for g in enumerate_disjoint(col, 4)])

# everything of length <= 5 follows from commutators and a single difference
gens = minimal_generators(col, 5)
print([str(g) for g in gens], "certified to length", gens.max_len_certified)

dec = decompose(col, BinomialDifference((3, 2, 3, 2), (4, 1, 4, 1)), gens)
for term in dec.terms:
    print(" ", term)
print("expands back:", dec.verify())

# pairwise coprime entries leave only the commutators
print(is_pairwise_coprime((2, 3, 5, 7)), list(minimal_generators((2, 3, 5, 7), 5)))
