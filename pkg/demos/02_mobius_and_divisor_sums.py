"""Möbius inversion and the two ways of ordering a double divisor sum."""
import numpy as np

from primesums import build_sieve
from primesums.divisors import (ArithmeticFunction, CommutationBatch, catalog,
                                divisor_sum, divisor_sum_table, mobius_invert)

sieve = build_sieve(10**4)
f = catalog(sieve)

# log n is the divisor sum of Lambda, so inverting log gives Lambda back
for n in (8, 9, 12, 97):
    print(n, "sum_{d|n} Lambda(d) =", round(divisor_sum(sieve, f["mangoldt"], n), 12),
          " log n =", round(float(np.log(n)), 12),
          " invert(log)(n) =", round(mobius_invert(sieve, f["log"], n), 12))

# round trip for mu itself: its divisor sum is the indicator of n = 1
table = divisor_sum_table(sieve.mu.astype(float), 30)
print("\nsum_{d|n} mu(d), n=1..30:", table[1:].astype(int))
indicator = ArithmeticFunction("e", lambda n: table[n], 30)
print("invert back:", [int(round(mobius_invert(sieve, indicator, n))) for n in range(1, 13)])

# both reorderings agree for an arbitrary weight A(k, d)
rng = np.random.default_rng(1)
W = rng.uniform(-1, 1, (501, 501))
batch = CommutationBatch(sieve, 500)
lhs, rhs, terms = batch.hyperbola(lambda n, d: W[n, d])
print("\nhyperbola: max |lhs - rhs| over x <= 500:", np.abs(lhs - rhs).max(), "terms at 500:", terms[500])
print("both identities hold for this A:", batch.check(lambda k, d: W[k, d]))
