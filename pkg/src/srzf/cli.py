"""Command-line front end.

Subcommands ``point``, ``sweep-mu-o``, ``sweep-alpha-o`` and ``tune``.
SNRs are given in dB. Exit codes: 0 success, 2 invalid arguments,
3 numerical failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .asymptotics import AsymptoticInputs
from .exceptions import InputError, SRZFError
from .harness import (FixedParams, PointError, ResultRow, SweepSpec, db_to_linear,
                      run_point, run_sweep, summarize, write_csv)
from .precoding import Scheme
from .tuning import tune

EXIT_OK, EXIT_ARGS, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4


def _schemes(value: str):
    if value.lower() == "both":
        return (Scheme.SRZF, Scheme.RZF)
    try:
        return (Scheme(value.upper()),)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown scheme {value!r}") from None


def _values(text: str):
    """``a,b,c`` or ``start:stop:step`` (stop inclusive)."""
    try:
        if ":" in text:
            start, stop, step = (float(t) for t in text.split(":"))
            n = int(round((stop - start) / step))
            return [float(v) for v in np.round(start + step * np.arange(n + 1), 12)]
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse sweep values {text!r}") from None


def _common(p: argparse.ArgumentParser, sweep: str | None = None):
    p.add_argument("--m", type=int, default=128, help="transmit antennas (default 128)")
    p.add_argument("--alpha-l", type=float, default=0.5, help="legitimate load K/M")
    if sweep != "alpha_o":
        p.add_argument("--alpha-o", type=float, default=0.25, help="overhearing load J/M")
    p.add_argument("--mu-l-db", type=float, default=0.0, help="legitimate SNR in dB")
    if sweep != "mu_o":
        p.add_argument("--mu-o-db", type=float, default=0.0, help="eavesdropper SNR in dB")
    p.add_argument("--trials", type=int, default=0,
                   help="Monte Carlo trials; 0 reports asymptotics only")
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0, help="SRZF regularizer")
    p.add_argument("--theta", type=float, default=1.0, help="SRZF leakage weight")
    p.add_argument("--zeta", type=float, default=1.0, help="RZF regularizer")
    p.add_argument("--optimized", action="store_true",
                   help="tune regularizers on the asymptotic rate instead of using fixed ones")
    p.add_argument("--scheme", type=_schemes, default=(Scheme.SRZF, Scheme.RZF),
                   help="SRZF, RZF or both (default both)")
    p.add_argument("--workers", type=int, default=None, help="worker threads")
    p.add_argument("--output", help="CSV output path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srzf", description="SRZF/RZF secrecy rates: asymptotics and Monte Carlo")
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("point", help="evaluate a single operating point"))
    p = sub.add_parser("sweep-mu-o", help="sweep the eavesdropper SNR (dB)")
    p.add_argument("--values", type=_values, required=True,
                   help="comma list or start:stop:step, e.g. -8:8:1")
    _common(p, sweep="mu_o")
    p = sub.add_parser("sweep-alpha-o", help="sweep the overhearing load")
    p.add_argument("--values", type=_values, required=True,
                   help="comma list or start:stop:step")
    _common(p, sweep="alpha_o")
    _common(sub.add_parser("tune", help="print optimal regularizers"))
    return parser


def _fixed(args) -> FixedParams:
    return FixedParams(lam=args.lam, theta=args.theta, zeta=args.zeta)


def _cmd_point(args) -> list[ResultRow]:
    return [run_point(args.m, args.alpha_l, args.alpha_o, args.mu_l_db, args.mu_o_db, s,
                      optimized=args.optimized, fixed_params=_fixed(args),
                      trials=args.trials, seed=args.seed, workers=args.workers)
            for s in args.scheme]


def _cmd_sweep(args, variable) -> list[ResultRow]:
    spec = SweepSpec(
        sweep_variable=variable, values=args.values, M=args.m, alpha_l=args.alpha_l,
        alpha_o=getattr(args, "alpha_o", 0.0), mu_l_db=args.mu_l_db,
        mu_o_db=getattr(args, "mu_o_db", 0.0), trials=args.trials,
        master_seed=args.seed, schemes=args.scheme, optimized=args.optimized,
        fixed_params=_fixed(args))
    return run_sweep(spec, workers=args.workers)


def _cmd_tune(args) -> list[ResultRow]:
    base = AsymptoticInputs(alpha_l=args.alpha_l, alpha_o=args.alpha_o,
                            mu_l=db_to_linear(args.mu_l_db), mu_o=db_to_linear(args.mu_o_db))
    rows = []
    for s in args.scheme:
        t = tune(s, base)
        print(f"{s.value}: lambda*={t.lambda_star:.6g} theta*={t.theta_star:.6g} "
              f"rate*={t.rate_star:.6f} bits ({t.grid_evals} evaluations"
              f"{', plateau' if t.plateau else ''})")
        rows.append(ResultRow("mu_o_db", args.mu_o_db, s.value, t.lambda_star,
                              t.theta_star, t.rate_star, seed=args.seed))
    return rows


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.trials < 0:
        parser.error("--trials must be non-negative")
    if args.command == "tune":
        args.optimized = True

    try:
        if args.command == "point":
            rows = _cmd_point(args)
        elif args.command == "sweep-mu-o":
            rows = _cmd_sweep(args, "mu_o_db")
        elif args.command == "sweep-alpha-o":
            rows = _cmd_sweep(args, "alpha_o")
        else:
            rows = _cmd_tune(args)
    except SRZFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        cause = exc.cause if isinstance(exc, PointError) else exc
        return EXIT_ARGS if isinstance(cause, InputError) else EXIT_NUMERIC

    if args.command != "tune":
        print(summarize(rows))
    if args.output:
        try:
            write_csv(rows, args.output)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
