"""Characters mod N and primes in residue classes."""
from primesums import (all_characters, build_sieve, build_tables, equidistribution_report,
                       orthogonality_check, pi_progression, unit_group)

G = unit_group(15)
print("(Z/15Z)* generators (residue, order):", G.generators)
chars = all_characters(G)
print(len(chars), "characters, orthogonal:", orthogonality_check(chars))
chi = chars[3]
print("chi_3 on units:", {u: chi.angle(u) for u in G.units})

sieve = build_sieve(10**6)
tables = build_tables(sieve)
for N in (4, 10, 12):
    rep = equidistribution_report(tables, sieve, 1e6, N)
    print(f"N={N:2d}: classes {rep.grid}, max relative deviation {rep.envelope:.4%}")

# each class keeps gaining primes as x doubles
print([pi_progression(tables, sieve, 2**k, 12, 11) for k in range(10, 20)])
