"""Command-line front end: ``primesums <command> [options]``.

Exit codes: 0 all checks passed, 1 a check failed, 2 invalid arguments,
3 I/O failure, 4 sieve cache missing.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import asymptotics as asy
from . import characters as ch
from . import invariants
from .errors import DomainError
from .sieve import build_sieve, load_cache, save_cache
from .tables import build_tables

DEFAULT_LIMIT = 10**6


class CliError(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.12g" % v
    return str(v)


def _jsonable(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float("%.12g" % v)
    return v


def emit(rows, columns, args):
    """Write rows as CSV (``%.12g`` reals) or a JSON array of objects."""
    if args.format == "json":
        text = json.dumps([{c: _jsonable(r[c]) for c in columns} for r in rows], indent=1) + "\n"
    else:
        lines = [",".join(columns)]
        lines += [",".join(_fmt(r[c]) for c in columns) for r in rows]
        text = "\n".join(lines) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc}", 3) from None


def load_tables(args, extent=None):
    """Sieve from ``--cache`` or fresh; a fresh sieve defaults to the extent
    the command needs."""
    if args.limit is not None:
        if args.limit < 2:
            raise CliError("--limit must be >= 2", 2)
        sieve = build_sieve(args.limit)
    elif args.cache is not None:
        if not Path(args.cache).exists():
            raise CliError(f"sieve cache {args.cache} not found", 4)
        try:
            sieve = load_cache(args.cache)
        except (OSError, ValueError) as exc:
            raise CliError(f"cannot read cache {args.cache}: {exc}", 3) from None
    else:
        sieve = build_sieve(max(2, int(math.ceil(extent))) if extent else DEFAULT_LIMIT)
    return sieve, build_tables(sieve)


def _grid(args, lo, hi):
    if args.grid:
        return asy.parse_grid(args.grid)
    return asy.log_grid(lo, hi, asy.POINTS_PER_DECADE)


def _grid_hi(args, fallback):
    if args.grid:
        return float(args.grid.split(":")[1])
    return args.limit or fallback


def cmd_sieve(args):
    if args.limit is None or args.limit < 2:
        raise CliError("sieve needs --limit >= 2", 2)
    sieve, tables = load_tables(args)
    if args.cache is not None:
        try:
            save_cache(sieve, args.cache)
        except OSError as exc:
            raise CliError(f"cannot write cache {args.cache}: {exc}", 3) from None
    # keep stdout clean when the grid CSV goes there
    stream = sys.stderr if args.grid and args.out in (None, "-") else sys.stdout
    print(f"limit={sieve.limit} pi={tables.pi(sieve.limit)} psi={tables.psi(sieve.limit):.12g}",
          file=stream)
    if args.grid:
        rows = [{"x": x, "pi": tables.pi(x), "theta": tables.theta(x), "psi": tables.psi(x),
                 "R": tables.residual(x).value} for x in asy.parse_grid(args.grid)]
        emit(rows, ["x", "pi", "theta", "psi", "R"], args)
    return 0


def cmd_selberg(args):
    sieve, tables = load_tables(args, _grid_hi(args, DEFAULT_LIMIT))
    grid = _grid(args, min(1e3, tables.limit), tables.limit)
    rep = asy.selberg_report(tables, sieve, grid)
    emit(rep.rows(), ["label", "x", "value", "normalizer"], args)
    maxima = asy.decade_maxima(rep.grid, rep.values)
    if not asy.envelope_non_increasing(maxima, 0.1):
        raise CliError(f"selberg envelope grows across decades: {maxima}", 1)
    return 0


def cmd_pnt(args):
    sieve, tables = load_tables(args, _grid_hi(args, DEFAULT_LIMIT))
    grid = _grid(args, min(1e3, tables.limit), tables.limit)
    rows, ok = [], True
    for x in grid:
        psi, theta, pil = asy.chebyshev_ratios(tables, x)
        lhs, rhs = asy.pntrlog2bnd_sides(tables, sieve, x)
        ok &= abs(psi - theta) <= 2 * math.log(x) ** 2 / math.sqrt(x)
        rows.append({"x": x, "psi_over_x": psi, "theta_over_x": theta, "pi_logx_over_x": pil,
                     "R_over_x": tables.residual(x).value / x, "pntr_lhs": lhs,
                     "pntr_rhs": rhs, "pntr_C": max(0.0, lhs - rhs) / (x * math.log(x))})
    emit(rows, list(rows[0]), args)
    if not ok:
        raise CliError("psi/x - theta/x exceeds 2 log^2 x / sqrt x", 1)
    return 0


def cmd_dirichlet(args):
    if args.N is None or args.N < 1:
        raise CliError("dirichlet needs --N >= 1", 2)
    if args.characters:
        chars = ch.all_characters(ch.unit_group(args.N))
        rows = []
        for i, chi in enumerate(chars):
            for n in range(args.N):
                v = chi(n)
                num, den = chi.angle(n) or (0, 0)
                rows.append({"N": args.N, "char_index": i, "n": n, "re": v.real, "im": v.imag,
                             "angle_num": num, "angle_den": den})
        emit(rows, ["N", "char_index", "n", "re", "im", "angle_num", "angle_den"], args)
        return 0
    if args.A is not None and math.gcd(args.A, args.N) != 1:
        raise CliError(f"gcd({args.A}, {args.N}) != 1", 2)
    x = args.x if args.x is not None else (args.limit or DEFAULT_LIMIT)
    sieve, tables = load_tables(args, x)
    counts = ch.progression_counts(tables, sieve, x, args.N)
    total = tables.pi(x)
    phi = len(counts)
    rows = [{"N": args.N, "A": A, "count": c, "phi": phi,
             "deviation": c * phi / total - 1.0 if total else 0.0}
            for A, c in counts.items() if args.A is None or A == args.A % args.N]
    emit(rows, ["N", "A", "count", "phi", "deviation"], args)
    return 0


def cmd_dvfsum(args):
    names = list(asy.SUM_ESTIMATES) if args.entry == "all" else [args.entry]
    rows, bad = [], []
    for name in names:
        entry = asy.SUM_ESTIMATES[name]
        x_max = args.x_max
        grid = asy.parse_grid(args.grid) if args.grid else asy.log_grid(entry.n0, x_max)
        L, viol = asy.dvfsum_estimate(entry, x_max, grid)
        rows.append({"entry": name, "x_max": x_max, "L": L, "max_violation": viol,
                     "passed": viol <= 0})
        if viol > 0:
            bad.append(name)
    emit(rows, ["entry", "x_max", "L", "max_violation", "passed"], args)
    if bad:
        raise CliError(f"sum estimate violated for {', '.join(bad)}", 1)
    return 0


def cmd_bootstrap(args):
    seq = asy.bootstrap_sequence(args.a0, args.c, args.k)
    step = max(1, args.stride)
    idx = list(range(0, args.k + 1, step))
    if idx[-1] != args.k:
        idx.append(args.k)
    emit([{"k": i, "a": seq[i]} for i in idx], ["k", "a"], args)
    if not (np.all(np.diff(seq) < 0) and np.all(seq > 0)):
        raise CliError("bootstrap sequence not strictly decreasing and positive", 1)
    return 0


def cmd_invariants(args):
    sieve, tables = load_tables(args, 10**4)
    results = invariants.run_all(sieve, tables, seed=args.seed)
    emit([{"check": n, "passed": p} for n, p in results], ["check", "passed"], args)
    failed = [n for n, p in results if not p]
    if failed:
        raise CliError(f"invariant failed: {', '.join(failed)}", 1)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=lambda s: int(float(s)), help="sieve bound")
    common.add_argument("--grid", help="lo:hi:points_per_decade, log spaced")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--cache", help="sieve cache file (SLSV format)")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="primesums", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("sieve", parents=[common], help="build tables, optionally cache")
    sub.add_parser("selberg", parents=[common], help="normalised Selberg residuals")
    sub.add_parser("pnt", parents=[common], help="Chebyshev ratios and residual bound sides")
    d = sub.add_parser("dirichlet", parents=[common], help="primes in residue classes")
    d.add_argument("--N", type=int)
    d.add_argument("--A", type=int)
    d.add_argument("--x", type=float)
    d.add_argument("--characters", action="store_true", help="emit the character table instead")
    v = sub.add_parser("dvfsum", parents=[common], help="sum-minus-integral limits")
    v.add_argument("--entry", choices=[*asy.SUM_ESTIMATES, "all"], default="all")
    v.add_argument("--x-max", type=float, default=1e6)
    b = sub.add_parser("bootstrap", parents=[common], help="iterate a -> a - c a^3")
    b.add_argument("--a0", type=float, required=True)
    b.add_argument("--c", type=float, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--stride", type=int, default=1)
    sub.add_parser("invariants", parents=[common], help="run every property check")
    return p


COMMANDS = {
    "sieve": cmd_sieve, "selberg": cmd_selberg, "pnt": cmd_pnt, "dirichlet": cmd_dirichlet,
    "dvfsum": cmd_dvfsum, "bootstrap": cmd_bootstrap, "invariants": cmd_invariants,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"primesums: {exc}", file=sys.stderr)
        return exc.status
    except DomainError as exc:
        print(f"primesums: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
