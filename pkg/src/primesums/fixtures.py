"""Frozen envelope constants.

The implied constants of the O-estimates are not known in closed form, so
they are measured once on a fixed sieve and grid, stored in
``data/envelopes.json`` with their provenance, and regression-tested.

Regenerate with ``python -m primesums.fixtures [--with-1e7]``.
"""

from __future__ import annotations

import argparse
import datetime
import json
from pathlib import Path

from . import asymptotics as asy
from . import characters as ch
from .sieve import build_sieve
from .tables import build_tables

ENVELOPES_PATH = Path(__file__).parent / "data" / "envelopes.json"


def load_envelopes(path=ENVELOPES_PATH):
    with open(path) as fh:
        return json.load(fh)


def _entry(value, limit, grid, note=""):
    return {
        "value": value,
        "kind": "measurement",
        "sieve_limit": limit,
        "grid": grid,
        "date": datetime.date.today().isoformat(),
        "note": note,
    }


def measure(limit=10**6):
    sieve = build_sieve(limit)
    tables = build_tables(sieve)
    out = {}

    grid_str = "1e3:1e6:40"
    grid = asy.parse_grid(grid_str)
    rep = asy.selberg_report(tables, sieve, grid)
    maxima = asy.decade_maxima(rep.grid, rep.values)
    out["selberg_decade_max"] = _entry({str(k): v for k, v in maxima.items()}, limit, grid_str,
                                       "max |(lhs - 2x log x)/x| per closed decade")
    out["selberg_residual_1e4"] = _entry(asy.selberg_residual(tables, sieve, 1e4), limit, "x=1e4")

    grid_str = "1e2:1e6:40"
    cs = [asy.pntrlog2bnd_constant(tables, sieve, x) for x in asy.parse_grid(grid_str)]
    out["pntrlog2bnd_C"] = _entry(max(cs), limit, grid_str,
                                  "max over grid of max(0, lhs - rhs_sum)/(x log x)")
    out["pntrlog2bnd_C_1e3"] = _entry(asy.pntrlog2bnd_constant(tables, sieve, 1e3), limit, "x=1e3")

    for x, label in ((1e3, "1e3"), (1e4, "1e4"), (1e5, "1e5"), (1e6, "1e6")):
        psi, theta, pil = asy.chebyshev_ratios(tables, x)
        out[f"chebyshev_ratios_{label}"] = _entry(
            {"psi_over_x": psi, "theta_over_x": theta, "pi_logx_over_x": pil}, limit, f"x={label}")

    out["residual_over_x_1e6"] = _entry(tables.residual(1e6).value / 1e6, limit, "x=1e6")

    d = {str(N): ch.equidistribution_report(tables, sieve, 1e6, N).envelope for N in range(1, 13)}
    out["dirichlet_d_max"] = _entry(d, limit, "x=1e6", "max_A |pi(x;N,A) phi(N)/pi(x) - 1|")

    a, _ = asy.residual_ratio_sup(tables, 1e4)
    out["refinement_ratio_1e4"] = _entry(
        asy.empirical_bound_refinement(tables, sieve, a, 1e4) / a, limit, "x=1e4",
        "return / a with a = sup_{1<=y<=x} |R(y)|/y")
    return out


def measure_1e7():
    limit = 10**7
    sieve = build_sieve(limit)
    tables = build_tables(sieve)
    grid_str = "1e3:1e7:40"
    rep = asy.selberg_report(tables, sieve, asy.parse_grid(grid_str))
    maxima = asy.decade_maxima(rep.grid, rep.values)
    return {"selberg_decade_max_1e7": _entry({str(k): v for k, v in maxima.items()}, limit, grid_str,
                                             "max |(lhs - 2x log x)/x| per closed decade")}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--with-1e7", action="store_true")
    p.add_argument("--out", type=Path, default=ENVELOPES_PATH)
    args = p.parse_args(argv)
    data = measure()
    if args.with_1e7:
        data.update(measure_1e7())
    elif args.out.exists():
        old = load_envelopes(args.out)
        if "selberg_decade_max_1e7" in old:
            data["selberg_decade_max_1e7"] = old["selberg_decade_max_1e7"]
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
