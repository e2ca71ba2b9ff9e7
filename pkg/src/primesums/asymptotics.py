"""Eventual bounds and the numerical shadows of the asymptotic estimates
behind the elementary prime number theorem.

Every ``O(g)`` statement is handled by dividing by ``g`` and sampling the
quotient on a log-spaced grid; an :class:`EventualBound` records the
threshold, the bound, and the samples it was read off.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .divisors import selberg_lhs
from .errors import DomainError, PreconditionError
from .summation import compensated_cumsum

POINTS_PER_DECADE = 40


@dataclass(frozen=True)
class EventualBound:
    c: float
    A: float
    samples: list = field(repr=False)

    def holds(self):
        return all(v <= self.A for x, v in self.samples if x >= self.c)


@dataclass
class ResidualReport:
    label: str
    grid: list
    values: list
    normalizer: str
    envelope: float = field(init=False)

    def __post_init__(self):
        self.envelope = max((abs(v) for v in self.values), default=0.0)

    def rows(self):
        return [{"label": self.label, "x": x, "value": v, "normalizer": self.normalizer}
                for x, v in zip(self.grid, self.values)]


def log_grid(lo, hi, per_decade=POINTS_PER_DECADE):
    """Log-spaced points from ``lo`` to ``hi`` with both endpoints exact."""
    if not 0 < lo <= hi:
        raise DomainError("need 0 < lo <= hi")
    steps = int(math.floor(per_decade * math.log10(hi / lo) + 1e-9))
    x = lo * 10.0 ** (np.arange(steps + 1) / per_decade)
    x = np.minimum(x, hi)
    if x[-1] < hi * (1 - 1e-12):
        x = np.append(x, hi)
    x[-1] = hi
    return x


def parse_grid(text):
    """``"lo:hi:points_per_decade"`` -> grid array."""
    try:
        lo, hi, ppd = text.split(":")
        return log_grid(float(lo), float(hi), int(float(ppd)))
    except ValueError as exc:
        raise DomainError(f"bad grid {text!r}: {exc}") from None


def decade_maxima(grid, values):
    """``{k: max |v|}`` over each closed decade ``[10^k, 10^(k+1)]`` the grid spans."""
    grid = np.asarray(grid, dtype=np.float64)
    vals = np.abs(np.asarray(values, dtype=np.float64))
    out = {}
    k = int(math.floor(math.log10(grid[0]) + 1e-12))
    while 10.0 ** (k + 1) <= grid[-1] * (1 + 1e-12):
        m = (grid >= 10.0**k * (1 - 1e-12)) & (grid <= 10.0 ** (k + 1) * (1 + 1e-12))
        if m.any():
            out[k] = float(vals[m].max())
        k += 1
    return out


def envelope_non_increasing(maxima, slack=0.1):
    ks = sorted(maxima)
    return all(maxima[b] <= maxima[a] + slack for a, b in zip(ks, ks[1:]))


def eventual_bound(fn, grid, c):
    """Bound ``|fn|`` on the grid points ``x >= c``."""
    grid = [float(x) for x in grid]
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise DomainError("grid must be sorted ascending")
    samples = [(x, abs(fn(x))) for x in grid if x >= c]
    if not samples:
        raise DomainError(f"no grid point >= {c}")
    return EventualBound(c, max(v for _, v in samples), samples)


def selberg_residual(tables, sieve, x):
    """``(selberg_lhs(x) - 2 x log x) / x``."""
    if x < 2:
        raise DomainError("selberg_residual needs x >= 2")
    return (selberg_lhs(tables, sieve, x) - 2 * x * math.log(x)) / x


def selberg_report(tables, sieve, grid):
    vals = [selberg_residual(tables, sieve, float(x)) for x in grid]
    return ResidualReport("selberg", [float(x) for x in grid], vals,
                          "(lhs - 2x log x)/x")


def pntrlog2bnd_sides(tables, sieve, x):
    """``(|R(x)| log^2 x, 2 sum_{n<=x} |R(x/n)| log n)``."""
    if not 2 <= x <= tables.limit:
        raise DomainError(f"x={x} outside [2, {tables.limit}]")
    lx = math.log(x)
    lhs = abs(tables.psi(x) - x) * lx * lx
    n = np.arange(2, int(math.floor(x)) + 1, dtype=np.float64)
    y = x / n
    r = np.abs(tables.psi_cum[np.floor(y).astype(np.int64)] - y)
    return lhs, 2.0 * math.fsum(r * np.log(n))


def pntrlog2bnd_constant(tables, sieve, x):
    """Implied constant ``max(0, lhs - rhs_sum) / (x log x)`` at ``x``."""
    lhs, rhs = pntrlog2bnd_sides(tables, sieve, x)
    return max(0.0, lhs - rhs) / (x * math.log(x))


@dataclass(frozen=True)
class SumEstimate:
    """A decreasing ``f`` with antiderivative ``F``; ``f`` decreases from ``n0`` on."""
    name: str
    f: Callable
    F: Callable
    n0: int = 1


SUM_ESTIMATES = {
    "harmonic": SumEstimate("harmonic", lambda x: 1.0 / x, np.log),
    "basel": SumEstimate("basel", lambda x: 1.0 / (x * x), lambda x: -1.0 / x),
    "log_over_n": SumEstimate("log_over_n", lambda x: np.log(x) / x,
                              lambda x: 0.5 * np.log(x) ** 2, n0=3),
}


def partial_sums_at(f, points, chunk=1 << 22):
    """``sum_{n <= p} f(n)`` for each integer ``p`` in ``points``, without
    holding every term in memory."""
    points = np.asarray(points, dtype=np.int64)
    order = np.argsort(points)
    out = np.empty(points.size)
    top = int(points.max()) if points.size else 0
    carry, lo, j = 0.0, 1, 0
    while lo <= top and j < points.size:
        hi = min(lo + chunk, top + 1)
        run = compensated_cumsum(f(np.arange(lo, hi, dtype=np.float64)), carry)
        while j < points.size and points[order[j]] < hi:
            p = points[order[j]]
            out[order[j]] = carry if p < lo else run[p - lo]
            j += 1
        carry = float(run[-1])
        lo = hi
    while j < points.size:
        out[order[j]] = carry
        j += 1
    return out


def dvfsum_estimate(entry, x_max, grid):
    """Estimate the limit ``L`` of ``g(x) = sum_{n<=x} f(n) - F(x)`` by
    ``g(x_max)`` and return ``(L, max_violation)``.

    The violation at ``x`` is ``|g(x) - L| - f(x) - 2 f(x_max)``; the slack
    covers using ``g(x_max)`` in place of the true limit.  Terms below
    ``n0`` stay in the partial sums, so they only shift ``L``.
    """
    grid = np.asarray(grid, dtype=np.float64)
    if np.any(grid < entry.n0) or np.any(grid > x_max):
        raise DomainError(f"grid must lie in [{entry.n0}, {x_max}]")
    pts = np.append(np.floor(grid), math.floor(x_max)).astype(np.int64)
    sums = partial_sums_at(entry.f, pts)
    g = sums[:-1] - entry.F(grid)
    L = float(sums[-1] - entry.F(float(x_max)))
    slack = 2.0 * float(entry.f(float(x_max)))
    viol = np.abs(g - L) - entry.f(grid) - slack
    return L, float(viol.max())


def chebyshev_ratios(tables, x):
    """``(psi(x)/x, theta(x)/x, pi(x) log x / x)``."""
    if not math.e <= x <= tables.limit:
        raise DomainError(f"x={x} outside [e, {tables.limit}]")
    return (tables.psi(x) / x, tables.theta(x) / x, tables.pi(x) * math.log(x) / x)


def bootstrap_sequence(a0, c, k):
    """``a_0, ..., a_k`` with ``a_{i+1} = a_i - c a_i^3``."""
    if a0 <= 0 or c <= 0:
        raise DomainError("need a0 > 0 and c > 0")
    if c * a0 * a0 >= 1:
        raise DomainError("need c * a0**2 < 1")
    if k < 1:
        raise DomainError("k must be positive")
    out = np.empty(k + 1)
    a = float(a0)
    out[0] = a
    for i in range(1, k + 1):
        a -= c * a * a * a
        out[i] = a
    return out


def residual_ratio_sup(tables, x, y_min=1.0):
    """``(sup |R(y)|/y, y*)`` over real ``y`` in ``[y_min, x]``.

    psi is constant on each ``[n, n+1)`` so the extremes sit at the integer
    points and at the left limits just below them.
    """
    lo, hi = int(math.ceil(y_min)), int(math.floor(x))
    cands = [np.array([y_min, x], dtype=np.float64)]
    vals = [np.abs(tables.psi_cum[[int(math.floor(y_min)), hi]] - cands[0]) / cands[0]]
    if hi >= lo:
        n = np.arange(lo, hi + 1)
        at = np.abs(tables.psi_cum[n] - n) / n
        cands.append(n.astype(np.float64))
        vals.append(at)
        m = n[n + 1 <= x]
        cands.append((m + 1).astype(np.float64))
        vals.append(np.abs(tables.psi_cum[m] - (m + 1)) / (m + 1))
    cands = np.concatenate(cands)
    vals = np.concatenate(vals)
    i = int(np.argmax(vals))
    return float(vals[i]), float(cands[i])


def empirical_bound_refinement(tables, sieve, a, x, y_min=1.0):
    """Normalised residual-bound right side under the hypothesis
    ``|R(y)| <= a y`` on ``[y_min, x]``:

        (2 / log^2 x) * sum_{n<=x} a (x/n) log n / x

    Raises PreconditionError (witness = offending ``y``) if the table
    contradicts the hypothesis.
    """
    if not 2 <= x <= tables.limit:
        raise DomainError(f"x={x} outside [2, {tables.limit}]")
    sup, y = residual_ratio_sup(tables, x, y_min)
    if sup > a * (1 + 1e-12):
        raise PreconditionError(f"|R(y)|/y = {sup:.6g} > a = {a} at y = {y:.6g}", y)
    n = np.arange(2, int(math.floor(x)) + 1, dtype=np.float64)
    return 2.0 * a * math.fsum(np.log(n) / n) / math.log(x) ** 2


def write_report_csv(reports, path_or_file):
    """ResidualReport rows as ``label,x,value,normalizer``."""
    rows = [["label", "x", "value", "normalizer"]]
    for rep in reports:
        for r in rep.rows():
            rows.append([r["label"], "%.12g" % r["x"], "%.12g" % r["value"], r["normalizer"]])
    if hasattr(path_or_file, "write"):
        csv.writer(path_or_file, lineterminator="\n").writerows(rows)
    else:
        with open(path_or_file, "w", newline="") as fh:
            csv.writer(fh, lineterminator="\n").writerows(rows)
