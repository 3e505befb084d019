"""
Weights of words and the orders they induce
===========================================

"""

from fractions import Fraction

from weightideals import (LogLinearArray, RegularArray, classify_lenlex, compare,
                          compare_lenlex, pretty_word, weight)

# a linear array: first column 2 3 4 6, each later column doubles the previous
A = RegularArray.linear((2, 3, 4, 6), 2)
for w in [(3, 2, 3, 2), (4, 1, 4, 1), (1, 2, 3, 4)]:
    print(pretty_word(w), weight(A, w))

# equal weights at equal length means the difference lies in the ideal
print(compare(A, (3, 2, 3, 2), (4, 1, 4, 1)).name)
# longer words always win
print(compare(A, (1, 1, 1), (4, 4)).name)

# log-linear arrays store exponents; slope 1/3 makes the first letter decisive
L = LogLinearArray((1, 2), Fraction(1, 3))
c = classify_lenlex(L, 6)
print(c.verdict, "alpha =", c.alpha, "beta =", c.beta)
print(compare(L, (1, 2, 2), (2, 1, 1)).name, compare_lenlex((1, 2, 2), (2, 1, 1), "left").name)

R = LogLinearArray((1, 2), 3)
print(classify_lenlex(R, 6).verdict)
