"""Summatory functions pi, theta, psi, Mertens and the residual psi(x) - x.

Queries accept real ``x`` (scalars or arrays) and use the prefix value at
``floor(x)``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .summation import compensated_cumsum


@dataclass(frozen=True, eq=False)
class ChebyshevTables:
    limit: int
    pi_cum: np.ndarray
    theta_cum: np.ndarray
    psi_cum: np.ndarray
    mertens_cum: np.ndarray

    def __post_init__(self):
        for arr in (self.pi_cum, self.theta_cum, self.psi_cum, self.mertens_cum):
            arr.flags.writeable = False

    def index(self, x):
        """Floor index for ``x`` in ``(0, limit]``; raises DomainError otherwise."""
        arr = np.asarray(x, dtype=np.float64)
        if np.any(~(arr > 0)) or np.any(arr > self.limit):
            raise DomainError(f"x outside (0, {self.limit}]")
        idx = np.floor(arr).astype(np.int64)
        return int(idx) if idx.ndim == 0 else idx

    def _lookup(self, table, x):
        out = table[self.index(x)]
        return out.item() if np.ndim(out) == 0 else out

    def pi(self, x):
        return self._lookup(self.pi_cum, x)

    def theta(self, x):
        return self._lookup(self.theta_cum, x)

    def psi(self, x):
        return self._lookup(self.psi_cum, x)

    def mertens(self, x):
        return self._lookup(self.mertens_cum, x)

    def residual(self, x):
        """``Residual`` for scalar ``x``; ``residual_values`` handles arrays."""
        return Residual(float(x), self.psi(x) - float(x))

    def residual_values(self, x):
        x = np.asarray(x, dtype=np.float64)
        return self.psi_cum[self.index(x)] - x


@dataclass(frozen=True)
class Residual:
    x: float
    value: float


def build_tables(sieve):
    """Prefix sums over a ``SieveTables``; theta and psi are compensated."""
    n = np.arange(sieve.limit + 1, dtype=np.float64)
    log_p = np.where(sieve.is_prime, np.log(np.maximum(n, 1.0)), 0.0)
    pi_cum = np.cumsum(sieve.is_prime, dtype=np.int64)
    theta_cum = compensated_cumsum(log_p)
    psi_cum = compensated_cumsum(sieve.mangoldt)
    mertens_cum = np.cumsum(sieve.mu, dtype=np.int64)
    return ChebyshevTables(sieve.limit, pi_cum, theta_cum, psi_cum, mertens_cum)


def write_csv(tables, grid, path_or_file):
    """Columns ``x,pi,theta,psi,R`` at each grid point, reals as ``%.12g``."""
    rows = [["x", "pi", "theta", "psi", "R"]]
    for x in grid:
        x = float(x)
        rows.append([
            "%.12g" % x,
            str(tables.pi(x)),
            "%.12g" % tables.theta(x),
            "%.12g" % tables.psi(x),
            "%.12g" % tables.residual(x).value,
        ])
    if hasattr(path_or_file, "write"):
        csv.writer(path_or_file, lineterminator="\n").writerows(rows)
    else:
        with open(path_or_file, "w", newline="") as fh:
            csv.writer(fh, lineterminator="\n").writerows(rows)
