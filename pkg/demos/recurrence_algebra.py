"""
Recurrences for sums, products and sections
===========================================

"""

from math import comb

from multgf.exactnum import UniPoly
from multgf.holonomic import (AlgebraicEquation, PRecurrence, algebraic_to_recurrence, rec_eval, rec_guess,
                              rec_product, rec_section, rec_sum)

fib = PRecurrence([[1], [-1], [-1]], 2, [1, 1])
geo = PRecurrence([[1], [-2]], 1, [2])

s = rec_sum(fib, geo)
print(s.to_text())
print([int(v.to_fraction()) for v in rec_eval(s, 10)])

# squares of Fibonacci numbers need order 3
sq = rec_product(fib, fib)
print("order", sq.order, [int(v.to_fraction()) for v in rec_eval(sq, 10)])

# every other Fibonacci number: F(2n) = 3 F(2n-2) - F(2n-4)
even = rec_section(fib, 2, 0)
print(even.to_text())

# Catalan numbers from y^2 - y + z = 0 (branch y = z + z^2 + 2z^3 + ...)
eq = AlgebraicEquation([UniPoly([0, 1]), UniPoly([-1]), UniPoly([1])])
cat = algebraic_to_recurrence(eq, [0, 1, 1, 2])
vals = [int(v.to_fraction()) for v in rec_eval(cat, 12)]
print(vals)
assert vals == [comb(2 * n - 2, n - 1) // n for n in range(1, 13)]

# guessing from data
guess = rec_guess([n**3 + n for n in range(1, 61)], 2, 3)
print(guess.to_text())
