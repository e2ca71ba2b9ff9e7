"""Named property checks over a built sieve, each returning a bool.

``run_all`` drives the full suite; the CLI ``invariants`` command reports
one line per check.
"""

from __future__ import annotations

import math

import numpy as np

from . import asymptotics as asy
from . import characters as ch
from .divisors import (CommutationBatch, catalog, divisor_sum_table,
                       mobius_invert, selberg_lhs, selberg_lhs_direct)
from .sieve import build_sieve, tol_identity


def mobius_sum(sieve):
    s = divisor_sum_table(sieve.mu.astype(np.int64), sieve.limit)
    expect = np.zeros_like(s)
    expect[1] = 1
    return bool(np.array_equal(s, expect))


def mangoldt_sum(sieve):
    s = divisor_sum_table(sieve.mangoldt, sieve.limit)
    n = np.arange(1, sieve.limit + 1, dtype=np.float64)
    tol = 1e-9 * np.maximum(1.0, np.log(n))
    return bool(np.all(np.abs(s[1:] - np.log(n)) <= tol))


def mu_multiplicative(sieve):
    L = sieve.limit
    mu = sieve.mu.astype(np.int64)
    # pairs are symmetric, so m <= n covers all of them
    for m in range(1, math.isqrt(L) + 1):
        n = np.arange(m, L // m + 1)
        ok = np.gcd(m, n) == 1
        if np.any(mu[m * n[ok]] != mu[m] * mu[n[ok]]):
            return False
    return True


def spf_consistent(sieve):
    n = np.arange(2, sieve.limit + 1)
    p = sieve.spf[2:].astype(np.int64)
    if np.any(n % p) or np.any(~sieve.is_prime[p]):
        return False
    return bool(np.array_equal(sieve.is_prime[2:], p == n)) and sieve.spf[1] == 0


def segment_independent(sieve):
    other = build_sieve(sieve.limit, segment_size=max(1, sieve.limit // 7 + 3))
    return sieve.same_as(other)


def chebyshev_shape(tables):
    pi, th, ps = tables.pi_cum[1:], tables.theta_cum[1:], tables.psi_cum[1:]
    if np.any(np.diff(pi) < 0) or np.any(np.diff(th) < 0) or np.any(np.diff(ps) < 0):
        return False
    x = np.arange(1, tables.limit + 1, dtype=np.float64)
    tol = 1e-9 * np.maximum(1.0, np.log(x))
    if np.any(th > ps + tol):
        return False
    return bool(np.all(ps <= th + 2 * np.sqrt(x) * np.log(x) + tol))


def psi_theta_expansion(tables, samples=200):
    for x in np.unique(np.geomspace(2, tables.limit, samples).astype(np.int64)):
        k_max = int(math.log2(x))
        # exact integer roots: x ** (1/k) can round below a perfect power
        total = math.fsum(tables.theta_cum[_iroot(int(x), k)] for k in range(1, k_max + 1))
        if abs(tables.psi(x) - total) > tol_identity(x):
            return False
    return True


def _iroot(x, k):
    r = int(round(x ** (1.0 / k)))
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def inversion_round_trip(sieve, upto=10**4):
    upto = min(upto, sieve.limit)
    funcs = catalog(sieve)
    for name in ("one", "log", "mu", "mangoldt"):
        g = funcs[name]
        f_table = divisor_sum_table(np.concatenate(([0.0], g(np.arange(1, upto + 1)))), upto)
        f = lambda n, t=f_table: t[n]
        for n in range(1, upto + 1):
            ndiv = len(sieve.divisors(n))
            if abs(mobius_invert(sieve, f, n) - float(g(n))) > 1e-9 * ndiv:
                return False
    return True


def random_weight(rng, upto):
    table = rng.uniform(-1.0, 1.0, size=(upto + 1, upto + 1))
    return lambda k, d: table[k, d]


def commutations(sieve, seed=0, count=200, upto=2000):
    upto = min(upto, sieve.limit)
    rng = np.random.default_rng(seed)
    batch = CommutationBatch(sieve, upto)
    return all(batch.check(random_weight(rng, upto)) for _ in range(count))


def selberg_reordering(tables, sieve):
    for x in (1e2, 1e3, 1e4):
        if x > sieve.limit:
            break
        if abs(selberg_lhs(tables, sieve, x) - selberg_lhs_direct(sieve, x)) > 1e-9 * x:
            return False
    return True


def character_algebra(max_modulus=50):
    for N in range(1, max_modulus + 1):
        chars = ch.all_characters(ch.unit_group(N))
        if not (ch.orthogonality_check(chars) and ch.column_orthogonality_check(chars)):
            return False
        if not all(ch.multiplicativity_check(c) for c in chars):
            return False
    return True


def progression_partition(tables, sieve, max_modulus=50, samples=20):
    for x in np.geomspace(2, tables.limit, samples):
        total = tables.pi(x)
        for N in range(1, max_modulus + 1):
            counts = ch.progression_counts(tables, sieve, x, N)
            small = sum(1 for p in sieve.primes[: total] if N % p == 0)
            if sum(counts.values()) + small != total:
                return False
    return True


def sum_estimates(x_max=1e6):
    for entry in asy.SUM_ESTIMATES.values():
        _, viol = asy.dvfsum_estimate(entry, x_max, asy.log_grid(entry.n0, x_max))
        if viol > 0:
            return False
    return True


def bootstrap_decreasing():
    a = asy.bootstrap_sequence(1.0, 0.1, 10**5)
    return bool(np.all(np.diff(a) < 0) and np.all(a > 0))


def run_all(sieve, tables, seed=0):
    """``[(name, passed), ...]`` for every check."""
    checks = [
        ("mobius_divisor_sum", lambda: mobius_sum(sieve)),
        ("mangoldt_divisor_sum", lambda: mangoldt_sum(sieve)),
        ("mu_multiplicative", lambda: mu_multiplicative(sieve)),
        ("spf_consistent", lambda: spf_consistent(sieve)),
        ("segment_independent", lambda: segment_independent(sieve)),
        ("chebyshev_shape", lambda: chebyshev_shape(tables)),
        ("psi_theta_expansion", lambda: psi_theta_expansion(tables)),
        ("inversion_round_trip", lambda: inversion_round_trip(sieve)),
        ("divisor_commutations", lambda: commutations(sieve, seed, count=20)),
        ("selberg_reordering", lambda: selberg_reordering(tables, sieve)),
        ("character_algebra", character_algebra),
        ("progression_partition", lambda: progression_partition(tables, sieve)),
        ("sum_estimates", sum_estimates),
        ("bootstrap_decreasing", bootstrap_decreasing),
    ]
    return [(name, bool(fn())) for name, fn in checks]
