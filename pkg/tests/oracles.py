"""Brute-force reference implementations, deliberately naive and free of
any dependency on the package under test."""

import math


def is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def factor(n):
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n):
    f = factor(n)
    if any(k > 1 for k in f.values()):
        return 0
    return (-1) ** len(f)


def mangoldt(n):
    f = factor(n)
    if len(f) == 1:
        (p,) = f
        return math.log(p)
    return 0.0


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def smallest_prime_factor(n):
    return 0 if n == 1 else min(factor(n))


def psi(x):
    return math.fsum(mangoldt(n) for n in range(1, int(x) + 1))


def selberg_lhs(x):
    X = int(x)
    lam = [0.0] + [mangoldt(n) for n in range(1, X + 1)]
    first = math.fsum(lam[n] * math.log(n) for n in range(1, X + 1))
    second = math.fsum(lam[u] * lam[v] for u in range(1, X + 1) for v in range(1, X // u + 1))
    return first + second
