"""Sieve tables and the Chebyshev functions.

Build the tables once, look at a few values of mu and Lambda, then watch
psi(x)/x, theta(x)/x and pi(x) log x / x drift towards 1.
"""
import math

from primesums import build_sieve, build_tables, chebyshev_ratios

sieve = build_sieve(10**6)
tables = build_tables(sieve)

print(" n  mu  Lambda  spf")
for n in (1, 2, 4, 6, 8, 9, 12, 30, 97):
    print(f"{n:2d} {sieve.mu[n]:3d} {sieve.mangoldt[n]:7.4f} {sieve.spf[n]:4d}")

# psi counts prime powers, theta only primes; the difference is about sqrt(x)
print("\n      x     psi/x   theta/x  pi log x/x")
for k in range(2, 7):
    x = 10.0**k
    psi, theta, pil = chebyshev_ratios(tables, x)
    print(f"{x:9.0f}  {psi:.5f}  {theta:.5f}  {pil:.5f}")

# pi(x) log x / x converges much more slowly: the correction is about 1/log x
x = 1e6
print("\npi(x) / (x / log x) - 1 =", tables.pi(x) / (x / math.log(x)) - 1)
print("R(x)/x = (psi(x) - x)/x =", tables.residual(x).value / x)
