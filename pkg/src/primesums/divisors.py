"""Divisor sums, Möbius inversion, and the two orderings of double divisor sums.

Arithmetic functions and the two-argument weights ``A(k, d)`` are passed as
callables that accept integer numpy arrays and return float arrays of the
same shape, so whole batches of terms are evaluated in one call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class ArithmeticFunction:
    name: str
    eval: Callable[[np.ndarray], np.ndarray]
    limit: int | None = None

    def __call__(self, n):
        n = np.asarray(n, dtype=np.int64)
        if np.any(n < 1) or (self.limit is not None and np.any(n > self.limit)):
            raise DomainError(f"{self.name} evaluated outside [1, {self.limit}]")
        return np.asarray(self.eval(n), dtype=np.float64)


def catalog(sieve):
    """The standard functions over a sieve: one, log, identity, mu, mangoldt."""
    lim = sieve.limit
    mu = sieve.mu.astype(np.float64)
    lam = sieve.mangoldt
    return {
        "one": ArithmeticFunction("one", lambda n: np.ones(n.shape), lim),
        "log": ArithmeticFunction("log", lambda n: np.log(n.astype(np.float64)), lim),
        "identity": ArithmeticFunction("identity", lambda n: n.astype(np.float64), lim),
        "mu": ArithmeticFunction("mu", lambda n: mu[n], lim),
        "mangoldt": ArithmeticFunction("mangoldt", lambda n: lam[n], lim),
    }


def _divisor_array(sieve, n):
    return np.asarray(sieve.divisors(n), dtype=np.int64)


def divisor_sum(sieve, f, n):
    """Sum of ``f(d)`` over the divisors ``d`` of ``n``."""
    return math.fsum(f(_divisor_array(sieve, n)))


def mobius_invert(sieve, f, n):
    """Sum of ``mu(d) * f(n / d)`` over ``d | n``.

    If ``f`` is the divisor sum of some ``g`` this recovers ``g(n)``.
    """
    d = _divisor_array(sieve, n)
    return math.fsum(sieve.mu[d].astype(np.float64) * f(n // d))


def divisor_sum_table(values, upto):
    """``out[n] = sum_{d | n} values[d]`` for all ``n <= upto`` (index 0 unused)."""
    out = np.zeros(upto + 1, dtype=np.float64)
    for d in range(1, upto + 1):
        out[d::d] += values[d]
    return out


def nested_commutation_sides(sieve, A, n):
    """Both orderings of ``sum_{k|n} sum_{d|k} A(k, d)``.

    Returns ``(lhs, rhs, terms)`` where ``rhs`` regroups the same terms as
    ``sum_{d|n} sum_{m|(n/d)} A(dm, d)``.
    """
    lk, ld, rk, rd = [], [], [], []
    for k in sieve.divisors(n):
        for d in sieve.divisors(k):
            lk.append(k)
            ld.append(d)
    for d in sieve.divisors(n):
        for m in sieve.divisors(n // d):
            rk.append(d * m)
            rd.append(d)
    lhs = math.fsum(np.asarray(A(np.array(lk), np.array(ld)), dtype=np.float64))
    rhs = math.fsum(np.asarray(A(np.array(rk), np.array(rd)), dtype=np.float64))
    return lhs, rhs, len(lk)


def check_divisor_commutation_nested(sieve, A, n):
    lhs, rhs, terms = nested_commutation_sides(sieve, A, n)
    return abs(lhs - rhs) <= 1e-9 * max(terms, 1)


def _hyperbola_pairs(x):
    # pairs (d*m, d) for d <= x, m <= x // d, grouped by d
    d = np.arange(1, x + 1, dtype=np.int64)
    counts = x // d
    d_rep = np.repeat(d, counts)
    starts = np.cumsum(counts) - counts
    m = np.arange(d_rep.size, dtype=np.int64) - np.repeat(starts, counts) + 1
    return d_rep * m, d_rep


def hyperbola_commutation_sides(sieve, A, x):
    """Both orderings of ``sum_{n<=x} sum_{d|n} A(n, d)``.

    The right side sums over ``d <= x`` and ``m <= x/d`` of ``A(dm, d)``.
    Returns ``(lhs, rhs, terms)``.
    """
    if x < 1 or x > sieve.limit:
        raise DomainError(f"x={x} outside [1, {sieve.limit}]")
    X = int(math.floor(x))
    ln, ld = [], []
    for n in range(1, X + 1):
        for d in sieve.divisors(n):
            ln.append(n)
            ld.append(d)
    rn, rd = _hyperbola_pairs(X)
    lhs = math.fsum(np.asarray(A(np.array(ln), np.array(ld)), dtype=np.float64))
    rhs = math.fsum(np.asarray(A(rn, rd), dtype=np.float64))
    return lhs, rhs, len(ln)


def check_divisor_commutation_hyperbola(sieve, A, x):
    lhs, rhs, terms = hyperbola_commutation_sides(sieve, A, x)
    return abs(lhs - rhs) <= 1e-9 * max(terms, 1)


class CommutationBatch:
    """Precomputed term layouts for checking both identities at every
    ``n, x <= upto`` for many weight functions.

    Each call to :meth:`nested` or :meth:`hyperbola` evaluates ``A`` once per
    term and returns per-``n`` (or per-``x``) arrays ``lhs, rhs, terms``.
    """

    def __init__(self, sieve, upto):
        if upto > sieve.limit:
            raise DomainError(f"upto={upto} exceeds sieve limit {sieve.limit}")
        self.upto = upto
        divs = [[]] + [sieve.divisors(n) for n in range(1, upto + 1)]

        # left: group n, term (k, d) with d | k | n
        g, a, b = [], [], []
        for n in range(1, upto + 1):
            for k in divs[n]:
                for d in divs[k]:
                    g.append(n); a.append(k); b.append(d)
        self._nl = (np.array(g), np.array(a), np.array(b))
        # right: group n, term (d*m, d) with d | n, m | n/d
        g, a, b = [], [], []
        for n in range(1, upto + 1):
            for d in divs[n]:
                for m in divs[n // d]:
                    g.append(n); a.append(d * m); b.append(d)
        self._nr = (np.array(g), np.array(a), np.array(b))

        # hyperbola left: (n, d) with d | n, accumulated in n
        g, b = [], []
        for n in range(1, upto + 1):
            for d in divs[n]:
                g.append(n); b.append(d)
        self._hl = (np.array(g), np.array(b))
        # hyperbola right: partial sums over m for each d, then for each x
        # gather S_d[x // d] over d <= x
        self._hr_pairs = _hyperbola_pairs(upto)
        counts = upto // np.arange(1, upto + 1)
        self._hr_counts = counts
        offsets = np.cumsum(counts) - counts
        xs = np.repeat(np.arange(1, upto + 1), np.arange(1, upto + 1))
        ds = np.arange(xs.size) - np.repeat(np.cumsum(np.arange(upto)), np.arange(1, upto + 1)) + 1
        self._hr_x = xs
        self._hr_gather = offsets[ds - 1] + xs // ds - 1
        self.hyperbola_terms = np.cumsum(np.bincount(self._hl[0], minlength=upto + 1))

    def nested(self, A):
        n = self.upto + 1
        g, k, d = self._nl
        lhs = np.bincount(g, weights=A(k, d), minlength=n)
        terms = np.bincount(g, minlength=n)
        g, k, d = self._nr
        rhs = np.bincount(g, weights=A(k, d), minlength=n)
        return lhs, rhs, terms

    def hyperbola(self, A):
        n = self.upto + 1
        g, d = self._hl
        lhs = np.cumsum(np.bincount(g, weights=A(g, d), minlength=n))
        dm, dd = self._hr_pairs
        vals = np.asarray(A(dm, dd), dtype=np.float64)
        # per-d running sums over m, laid out contiguously by d
        counts = self._hr_counts
        starts = np.cumsum(counts) - counts
        running = np.cumsum(vals)
        base = np.repeat(running[starts] - vals[starts], counts)
        partial = running - base
        rhs = np.bincount(self._hr_x, weights=partial[self._hr_gather], minlength=n)
        return lhs, rhs, self.hyperbola_terms

    def check(self, A):
        """True iff both identities hold at every ``n, x <= upto``."""
        lhs, rhs, terms = self.nested(A)
        ok = np.all(np.abs(lhs - rhs)[1:] <= 1e-9 * np.maximum(terms[1:], 1))
        lhs, rhs, terms = self.hyperbola(A)
        return bool(ok and np.all(np.abs(lhs - rhs)[1:] <= 1e-9 * np.maximum(terms[1:], 1)))


def selberg_lhs(tables, sieve, x):
    """``sum_{n<=x} Lambda(n) log n + sum_{uv<=x} Lambda(u) Lambda(v)``.

    The double sum is reordered as ``sum_{u<=x} Lambda(u) psi(x/u)``, which
    takes one pass over the prime powers up to ``x``.
    """
    if not 1 <= x <= tables.limit:
        raise DomainError(f"x={x} outside [1, {tables.limit}]")
    X = int(math.floor(x))
    lam = sieve.mangoldt[: X + 1]
    u = np.flatnonzero(lam)
    first = math.fsum(lam[u] * np.log(u.astype(np.float64)))
    second = math.fsum(lam[u] * tables.psi_cum[X // u])
    return first + second


def selberg_lhs_direct(sieve, x):
    """Same quantity as :func:`selberg_lhs`, by forming the Dirichlet
    convolution ``(Lambda * Lambda)(n)`` for every ``n <= x`` first."""
    X = int(math.floor(x))
    lam = sieve.mangoldt[: X + 1]
    conv = np.zeros(X + 1)
    for d in np.flatnonzero(lam):
        top = X // d
        conv[d : d * top + 1 : d] += lam[d] * lam[1 : top + 1]
    n = np.arange(1, X + 1, dtype=np.float64)
    return math.fsum(lam[1:] * np.log(n)) + math.fsum(conv[1:])
