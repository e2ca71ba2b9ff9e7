"""Segmented sieve producing primality, Möbius, von Mangoldt and smallest
prime factor tables in a single pass.

All arrays are indexed directly by ``n`` and have length ``limit + 1``;
slot 0 is padding and holds zeros.  Logarithms are natural.
"""

from __future__ import annotations

import math
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import DomainError, ResourceLimitError

DEFAULT_SEGMENT_SIZE = 1 << 20
DEFAULT_MEMORY_BUDGET = 3 << 30

# is_prime (u1) + mu (i1) + mangoldt (f8) + spf (u4)
BYTES_PER_ENTRY = 14

CACHE_MAGIC = b"SLSV"
CACHE_VERSION = 1
_HEADER = struct.Struct("<4sIQ")


def tol_identity(n):
    """Tolerance for identities among sums of logarithms at ``n``."""
    return 1e-9 * max(1.0, math.log(n))


@dataclass(frozen=True, eq=False)
class SieveTables:
    limit: int
    is_prime: np.ndarray
    mu: np.ndarray
    mangoldt: np.ndarray
    spf: np.ndarray

    def __post_init__(self):
        for arr in (self.is_prime, self.mu, self.mangoldt, self.spf):
            if arr.shape != (self.limit + 1,):
                raise ValueError("table length does not match limit")
            arr.flags.writeable = False

    @cached_property
    def primes(self):
        """Ascending array of all primes up to ``limit``."""
        return np.flatnonzero(self.is_prime)

    def _check(self, n):
        if not 1 <= n <= self.limit:
            raise DomainError(f"n={n} outside [1, {self.limit}]")

    def factorize(self, n):
        """Return ``[(p, k), ...]`` with ``n = prod p**k``, using the spf table."""
        self._check(n)
        out = []
        while n > 1:
            p = int(self.spf[n])
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        return out

    def divisors(self, n):
        divs = [1]
        for p, k in self.factorize(n):
            divs = [d * p**j for d in divs for j in range(k + 1)]
        return sorted(divs)

    def same_as(self, other):
        return (
            self.limit == other.limit
            and np.array_equal(self.is_prime, other.is_prime)
            and np.array_equal(self.mu, other.mu)
            and np.array_equal(self.mangoldt, other.mangoldt)
            and np.array_equal(self.spf, other.spf)
        )


def _small_primes(bound):
    if bound < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def _sieve_segment(lo, hi, base_primes, is_prime, mu, mangoldt, spf):
    size = hi - lo
    n = np.arange(lo, hi, dtype=np.int64)
    seg_spf = np.zeros(size, dtype=np.uint32)
    seg_mu = np.ones(size, dtype=np.int8)
    seg_lam = np.zeros(size, dtype=np.float64)
    rem = n.copy()

    for p in base_primes:
        p = int(p)
        if p >= hi:
            break
        first = max(p, -(-lo // p) * p)
        sl = slice(first - lo, size, p)
        view = seg_spf[sl]
        seg_spf[sl] = np.where(view == 0, p, view)
        rem[sl] //= p
        seg_mu[sl] *= -1
        p2 = p * p
        if p2 < hi:
            seg_mu[max(p2, -(-lo // p2) * p2) - lo :: p2] = 0
            logp = math.log(p)
            q = p2
            while q < hi:
                if q >= lo:
                    seg_lam[q - lo] = logp
                q *= p

    # At most one prime factor exceeds sqrt(limit); it survives in rem.
    big = rem > 1
    seg_mu[big] = -seg_mu[big]
    unmarked = (seg_spf == 0) & (n >= 2)
    seg_spf[unmarked] = n[unmarked]
    prime = (seg_spf == n) & (n >= 2)
    seg_lam[prime] = np.log(n[prime].astype(np.float64))

    is_prime[lo:hi] = prime
    mu[lo:hi] = seg_mu
    mangoldt[lo:hi] = seg_lam
    spf[lo:hi] = seg_spf


def build_sieve(limit, segment_size=DEFAULT_SEGMENT_SIZE, *, workers=1,
                memory_budget=DEFAULT_MEMORY_BUDGET):
    """Sieve ``[1, limit]`` in segments of ``segment_size`` entries.

    The base primes up to ``sqrt(limit)`` are found first; each segment is
    then factored against them independently, so segments may be handed to
    ``workers`` threads.  Output does not depend on ``segment_size``.
    """
    limit = int(limit)
    segment_size = int(segment_size)
    if limit < 1:
        raise DomainError("limit must be >= 1")
    if segment_size < 1:
        raise DomainError("segment_size must be >= 1")
    need = (limit + 1) * BYTES_PER_ENTRY
    if need > memory_budget:
        raise ResourceLimitError(
            f"limit={limit} needs {need} bytes, budget is {memory_budget}"
        )

    is_prime = np.zeros(limit + 1, dtype=bool)
    mu = np.zeros(limit + 1, dtype=np.int8)
    mangoldt = np.zeros(limit + 1, dtype=np.float64)
    spf = np.zeros(limit + 1, dtype=np.uint32)
    base = _small_primes(math.isqrt(limit))

    bounds = [(lo, min(lo + segment_size, limit + 1))
              for lo in range(1, limit + 1, segment_size)]

    def run(b):
        _sieve_segment(b[0], b[1], base, is_prime, mu, mangoldt, spf)

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(workers) as pool:
            list(pool.map(run, bounds))
    else:
        for b in bounds:
            run(b)
    return SieveTables(limit, is_prime, mu, mangoldt, spf)


def mangoldt_divisor_identity_check(tables, n):
    """True iff the von Mangoldt values over the divisors of ``n`` sum to log n."""
    tables._check(n)
    total = math.fsum(float(tables.mangoldt[d]) for d in tables.divisors(n))
    return abs(total - math.log(n)) <= tol_identity(n)


def save_cache(tables, path):
    """Write ``tables`` in the portable little-endian SLSV layout."""
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(CACHE_MAGIC, CACHE_VERSION, tables.limit))
        fh.write(tables.is_prime.astype("u1").tobytes())
        fh.write(tables.mu.astype("i1").tobytes())
        fh.write(tables.mangoldt.astype("<f8").tobytes())
        fh.write(tables.spf.astype("<u4").tobytes())


def load_cache(path):
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise ValueError("truncated sieve cache")
    magic, version, limit = _HEADER.unpack_from(data)
    if magic != CACHE_MAGIC:
        raise ValueError(f"bad cache magic {magic!r}")
    if version != CACHE_VERSION:
        raise ValueError(f"unsupported cache version {version}")
    m = limit + 1
    if len(data) != _HEADER.size + m * BYTES_PER_ENTRY:
        raise ValueError("sieve cache size does not match its header")

    off = _HEADER.size
    arrays = []
    for dtype, width in (("u1", 1), ("i1", 1), ("<f8", 8), ("<u4", 4)):
        arrays.append(np.frombuffer(data, dtype=dtype, count=m, offset=off).copy())
        off += m * width
    is_prime, mu, lam, spf = arrays
    return SieveTables(int(limit), is_prime.astype(bool), mu.astype(np.int8),
                       lam.astype(np.float64), spf.astype(np.uint32))
