"""Dirichlet characters built from a brute-force cyclic decomposition of the
unit group, plus prime counts in residue classes.

A character value on a unit is ``exp(2*pi*i * num / den)`` where ``den`` is
the exponent of the group; the integer ``num`` is stored exactly, so
multiplicativity is checked in integer arithmetic.
"""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce

import numpy as np

from .asymptotics import ResidualReport
from .errors import DomainError


@dataclass(frozen=True, eq=False)
class UnitGroup:
    modulus: int
    units: tuple
    generators: tuple  # ((residue, order), ...)
    discrete_log: dict = field(repr=False)

    @property
    def order(self):
        return len(self.units)

    @property
    def exponent(self):
        return reduce(math.lcm, (o for _, o in self.generators), 1)


def _order(g, N):
    k, h = 1, g % N
    one = 1 % N
    while h != one:
        h = h * g % N
        k += 1
    return k


def unit_group(N):
    """Decompose ``(Z/NZ)*`` into cyclic factors.

    Greedy: repeatedly take the element of largest order modulo the subgroup
    built so far, among those whose order equals that quotient order, so each
    new factor meets the previous ones trivially.  Ties go to the smallest
    residue.
    """
    if N < 1:
        raise DomainError("modulus must be >= 1")
    units = tuple(a for a in range(N) if math.gcd(a, N) == 1)
    one = 1 % N
    sub = {one}
    gens = []
    while len(sub) < len(units):
        best = None
        for h in units:
            if h in sub:
                continue
            q, p = 1, h
            while p not in sub:
                p = p * h % N
                q += 1
            if (best is None or q > best[1]) and _order(h, N) == q:
                best = (h, q)
        h, q = best
        new = set()
        p = one
        for _ in range(q):
            new.update(s * p % N for s in sub)
            p = p * h % N
        sub = new
        gens.append(best)

    dlog = {}
    orders = [o for _, o in gens]
    for exps in itertools.product(*(range(o) for o in orders)):
        r = one
        for (g, _), e in zip(gens, exps):
            r = r * pow(g, e, N) % N
        dlog[r] = exps
    if len(dlog) != len(units):
        raise AssertionError(f"decomposition of (Z/{N}Z)* is not direct")
    return UnitGroup(N, units, tuple(gens), dlog)


_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True, eq=False)
class Character:
    group: UnitGroup = field(repr=False)
    exponents: tuple

    @property
    def modulus(self):
        return self.group.modulus

    @cached_property
    def angles(self):
        """``{unit: numerator}`` with value ``exp(2 pi i num / den)``."""
        den = self.group.exponent
        steps = [e * (den // o) for e, (_, o) in zip(self.exponents, self.group.generators)]
        return {u: sum(s * l for s, l in zip(steps, logs)) % den
                for u, logs in self.group.discrete_log.items()}

    def angle(self, n):
        """``(num, den)`` for a unit, ``None`` when ``gcd(n, N) > 1``."""
        num = self.angles.get(n % self.modulus)
        return None if num is None else (num, self.group.exponent)

    def __call__(self, n):
        a = self.angle(n)
        if a is None:
            return 0j
        num, den = a
        if (4 * num) % den == 0:
            return _QUARTER_TURNS[(4 * num) // den]
        return complex(np.exp(2j * np.pi * num / den))

    def values(self):
        """Complex values on ``0, 1, ..., N-1``."""
        return np.array([self(n) for n in range(self.modulus)])

    @property
    def is_principal(self):
        return not any(self.exponents)


def all_characters(G):
    """All ``phi(N)`` characters of ``G``, principal first."""
    orders = [o for _, o in G.generators]
    return [Character(G, e) for e in itertools.product(*(range(o) for o in orders))]


def multiplicativity_check(chi):
    """Exact check of ``chi(mn) = chi(m) chi(n)`` on all residue pairs,
    comparing angle numerators modulo the group exponent."""
    N = chi.modulus
    den = chi.group.exponent
    for m in range(N):
        for n in range(N):
            a, b, c = chi.angle(m), chi.angle(n), chi.angle(m * n)
            if a is None or b is None:
                if c is not None:
                    return False
            elif c is None or (a[0] + b[0] - c[0]) % den:
                return False
    return chi.angle(1) == (0, den)


def _character_matrix(chars):
    if not chars:
        raise DomainError("empty character list")
    G = chars[0].group
    N = G.modulus
    if any(c.modulus != N for c in chars):
        raise DomainError("characters have different moduli")
    if len({c.exponents for c in chars}) != len(chars) or len(chars) != G.order:
        raise DomainError(f"need all {G.order} distinct characters mod {N}")
    return G, np.array([c.values() for c in chars])


def orthogonality_check(chars, tol=1e-9):
    """Row orthogonality: ``sum_n chi(n) conj(chi'(n)) = phi(N) [chi = chi']``."""
    G, M = _character_matrix(chars)
    gram = M @ M.conj().T
    return bool(np.all(np.abs(gram - G.order * np.eye(len(chars))) <= tol))


def column_orthogonality_check(chars, tol=1e-9):
    """``sum_chi chi(n) conj(chi(m)) = phi(N) [n = m]`` for units ``n, m``."""
    G, M = _character_matrix(chars)
    U = M[:, list(G.units)]
    gram = U.T @ U.conj()
    return bool(np.all(np.abs(gram - G.order * np.eye(G.order)) <= tol))


def totient(N):
    return sum(1 for a in range(N) if math.gcd(a, N) == 1)


def pi_progression(tables, sieve, x, N, A):
    """Number of primes ``p <= x`` with ``p = A (mod N)``; needs ``gcd(A, N) = 1``."""
    if N < 1:
        raise DomainError("modulus must be >= 1")
    if math.gcd(A, N) != 1:
        raise DomainError(f"gcd({A}, {N}) != 1")
    X = tables.index(x)
    p = sieve.primes[: tables.pi_cum[X]]
    return int(np.count_nonzero(p % N == A % N))


def progression_counts(tables, sieve, x, N):
    """``{A: pi(x; N, A)}`` for every residue ``A`` coprime to ``N``."""
    X = tables.index(x)
    p = sieve.primes[: tables.pi_cum[X]]
    counts = np.bincount(p % N, minlength=N)
    return {A: int(counts[A]) for A in range(N) if math.gcd(A, N) == 1}


def equidistribution_report(tables, sieve, x, N):
    """Relative deviation ``pi(x;N,A) phi(N) / pi(x) - 1`` per coprime class."""
    counts = progression_counts(tables, sieve, x, N)
    phi = len(counts)
    total = tables.pi(x)
    dev = [c * phi / total - 1.0 for c in counts.values()]
    return ResidualReport(
        label=f"equidistribution_N{N}",
        grid=list(counts),
        values=dev,
        normalizer="pi(x;N,A)*phi(N)/pi(x) - 1",
    )


def write_character_csv(chars, path_or_file):
    """Columns ``N,char_index,n,re,im,angle_num,angle_den``; non-units get
    value 0 and angle ``0,0``."""
    rows = [["N", "char_index", "n", "re", "im", "angle_num", "angle_den"]]
    for i, chi in enumerate(chars):
        for n in range(chi.modulus):
            v = chi(n)
            num, den = chi.angle(n) or (0, 0)
            rows.append([chi.modulus, i, n, "%.12g" % v.real, "%.12g" % v.imag, num, den])
    if hasattr(path_or_file, "write"):
        csv.writer(path_or_file, lineterminator="\n").writerows(rows)
    else:
        with open(path_or_file, "w", newline="") as fh:
            csv.writer(fh, lineterminator="\n").writerows(rows)
