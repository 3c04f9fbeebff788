"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NumericError
from .quadrature import DEFAULT_SPEC, IntegrationSpec
from .reports import critical_report, first_unentangled, oracle_rows
from .sweep import (CSV_HEADER, QUANTITIES, SweepSpec, evaluate_point, format_csv, parse_values,
                    run_sweep, write_csv)

EXIT_USAGE = 1
EXIT_NUMERIC = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _spec(args) -> IntegrationSpec:
    if args.tol is None:
        return DEFAULT_SPEC
    return IntegrationSpec(args.tol, args.tol, DEFAULT_SPEC.max_subdivisions)


def _emit(text: str, out):
    if out:
        write_csv(text, out)
    else:
        sys.stdout.write(text)


def cmd_point(args):
    rows = evaluate_point(args.gamma, args.lam, args.temp, parse_r(args.r),
                          QUANTITIES, _spec(args), strict=False)
    rows.sort()
    if args.json:
        records = [dict(zip(CSV_HEADER, (r.gamma, r.lam, r.temperature, r.r, r.quantity,
                                         r.value))) for r in rows]
        _emit(json.dumps(records, indent=2) + "\n", args.out)
    else:
        _emit(format_csv(rows), args.out)


def cmd_sweep(args):
    if args.job:
        sweep = SweepSpec.from_job(args.job)
        if args.out is None:
            args.out = json.load(open(args.job)).get("out")
    else:
        if args.lam is None:
            raise ValueError("--lambda is required without --job")
        sweep = SweepSpec.build(args.gamma, args.lam, args.temp, args.r, args.quantities)
    rows = run_sweep(sweep, _spec(args), jobs=args.jobs)
    _emit(format_csv(rows), args.out)


def cmd_critical(args):
    rows = critical_report(args.r_max, _spec(args))
    first = first_unentangled(rows)
    if args.json:
        print(json.dumps({"rows": [r.as_dict() for r in rows],
                          "first_unentangled_r": first}, indent=2))
        return
    print(f"{'r':>3} {'xx closed':>14} {'xx quad':>14} {'|diff|':>9} "
          f"{'yy closed':>14} {'|diff|':>9} {'zz':>12} {'C':>10}")
    for row in rows:
        print(f"{row.r:3d} {row.xx_closed:14.10f} {row.xx_quad:14.10f} {row.xx_diff:9.1e} "
              f"{row.yy_closed:14.10f} {row.yy_diff:9.1e} {row.zz:12.8f} {row.concurrence:10.6f}")
    print(f"first separation with C = 0: {first if first is not None else 'none up to r_max'}")


def cmd_oracle(args):
    all_rows, n_col = [], []
    for g in parse_values(args.gamma):
        for lam in parse_values(args.lam):
            for t in parse_values(args.temp):
                rows, ncol = oracle_rows(args.n_sites, g, lam, t, args.r_max, _spec(args))
                all_rows += rows
                n_col += ncol
    _emit(format_csv(all_rows, {"n_sites": n_col}), args.out)


def cmd_plot(args):
    from .plotting import plot_csv

    kind = plot_csv(args.csv, args.out)
    print(f"wrote {kind} to {args.out}")


def parse_r(text) -> list[int]:
    return [int(v) for v in str(text).split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="xyentangle",
                description="Entanglement in the infinite anisotropic XY chain.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--tol", type=float, default=None,
                        help="absolute and relative quadrature tolerance")
        sp.add_argument("--out", default=None, help="output file (default stdout)")

    sp = sub.add_parser("point", help="all quantities at one parameter point")
    sp.add_argument("--gamma", type=float, default=1.0)
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--temp", type=float, default=0.0)
    sp.add_argument("--r", default="1")
    sp.add_argument("--json", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_point)

    sp = sub.add_parser("sweep", help="grid sweep to CSV")
    sp.add_argument("--job", help="JSON job file mirroring the flags below")
    sp.add_argument("--gamma", default="1")
    sp.add_argument("--lambda", dest="lam", help="a:b:step, list, or value")
    sp.add_argument("--temp", default="0")
    sp.add_argument("--r", default="1")
    sp.add_argument("--quantities", default="concurrence",
                    help=f"comma list from {','.join(QUANTITIES)}")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("critical", help="critical-point correlator report")
    sp.add_argument("--r-max", type=int, default=6)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--tol", type=float, default=None)
    sp.set_defaults(func=cmd_critical)

    sp = sub.add_parser("oracle", help="finite-chain exact diagonalisation vs infinite chain")
    sp.add_argument("--n-sites", type=int, required=True)
    sp.add_argument("--gamma", default="1")
    sp.add_argument("--lambda", dest="lam", default="1")
    sp.add_argument("--temp", default="0")
    sp.add_argument("--r-max", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("plot", help="render a sweep CSV as a vector figure")
    sp.add_argument("csv")
    sp.add_argument("out")
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
