"""Sum-minus-integral limits and the iteration a -> a - c a^3."""
import math

from primesums import asymptotics as asy

for name, x_max in (("harmonic", 1e7), ("basel", 1e6), ("log_over_n", 1e6)):
    e = asy.SUM_ESTIMATES[name]
    L, viol = asy.dvfsum_estimate(e, x_max, asy.log_grid(e.n0, x_max))
    print(f"{name:10s}  L = {L:.10f}   max violation = {viol:.2e}")
print("(Euler's constant 0.5772156649, pi^2/6 = %.10f)" % (math.pi**2 / 6))

c = 0.1
seq = asy.bootstrap_sequence(1.0, c, 10**6)
for k in (1, 10, 100, 10**4, 10**6):
    print(f"a_{k} = {seq[k]:.6f}   1/sqrt(2ck) = {1 / math.sqrt(2 * c * k):.6f}")
