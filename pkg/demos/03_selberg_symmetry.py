"""The Selberg symmetry formula and the residual bound built on it.

The normalised residual (lhs - 2 x log x)/x should stay bounded; the
per-decade maxima make that visible.
"""
from primesums import build_sieve, build_tables
from primesums import asymptotics as asy

sieve = build_sieve(10**6)
tables = build_tables(sieve)

grid = asy.log_grid(1e3, 1e6, 40)
rep = asy.selberg_report(tables, sieve, grid)
for k, m in asy.decade_maxima(rep.grid, rep.values).items():
    print(f"decade 1e{k}..1e{k + 1}: max |residual| = {m:.4f}")

print("\n        x     |R| log^2 x     2 sum |R(x/n)| log n   C(x)")
for x in asy.log_grid(1e2, 1e6, 1):
    lhs, rhs = asy.pntrlog2bnd_sides(tables, sieve, x)
    print(f"{x:9.0f}  {lhs:14.2f}  {rhs:22.2f}   {asy.pntrlog2bnd_constant(tables, sieve, x):.3g}")
