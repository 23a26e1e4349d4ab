"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .bench import (VerificationFailure, format_summary, records_to_csv, run_bench,
                    summarize)
from .bma import PointSet, buchberger_moller
from .essbm import essbm
from .io import ParseError, format_result, format_variety, parse_variety
from .order import parse_order
from .rng import random_variety
from .verify import verify_result

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(args):
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            v = parse_variety(text, strict=args.strict)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        order = parse_order(args.order, v.n_vars, args.varorder)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return v, order


def cmd_gb(args) -> int:
    v, order = _load(args)
    if args.algorithm == "essbm":
        res = essbm(v, order)
        text = format_result(res.g, res.sm, res.ev)
        status = EXIT_OK
        if args.verify:
            report = verify_result(res, v)
            text += report.render() + "\n"
            status = EXIT_OK if report.passed else EXIT_VERIFY
    else:
        gb, sm = buchberger_moller(PointSet(v.points, v.p, order))
        text = format_result(gb, sm)
        status = EXIT_OK
    _emit(text, args.out)
    return status


def cmd_verify(args) -> int:
    v, order = _load(args)
    res = essbm(v, order)
    report = verify_result(res, v, oracle=args.oracle)
    _emit(report.render() + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_gen(args) -> int:
    try:
        v = random_variety(args.p, args.n, args.m, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(format_variety(v), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    orders = args.order or ["lex"]
    try:
        records = run_bench(args.p, args.n, args.m, orders, seeds=args.seeds,
                            base_seed=args.seed, verify=args.verify, jobs=args.jobs)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(records_to_csv(records), args.out)
    summary = format_summary(summarize(records))
    if args.summary:
        Path(args.summary).write_text(summary, encoding="utf-8")
    else:
        sys.stderr.write(summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointideal",
        description="Groebner bases of vanishing ideals of points over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def order_flags(sp):
        sp.add_argument("--order", default="lex",
                        help="lex, grevlex or matrix:<n*n comma separated integers>")
        sp.add_argument("--varorder", default=None,
                        help="comma separated 1-based variable indices, largest first")
        sp.add_argument("--strict", action="store_true",
                        help="reject repeated points instead of dropping them")
        sp.add_argument("--out", default=None, help="write output here instead of stdout")

    sp = sub.add_parser("gb", help="compute the reduced Groebner basis of a variety file")
    sp.add_argument("file")
    order_flags(sp)
    sp.add_argument("--algorithm", choices=("essbm", "bma"), default="essbm")
    sp.add_argument("--verify", action="store_true", help="append the verification report")
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("verify", help="run the verification checks on a variety file")
    sp.add_argument("file")
    order_flags(sp)
    sp.add_argument("--oracle", action="store_true",
                    help="also compare against a full-ring Buchberger-Moeller run")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="write a random variety")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time EssBM against Buchberger-Moeller on random varieties")
    sp.add_argument("--p", type=_int_list, default=[3])
    sp.add_argument("--n", type=_int_list, default=[100, 150, 200, 250, 300])
    sp.add_argument("--m", type=_int_list, default=[5, 10, 15])
    sp.add_argument("--order", action="append",
                    help="term order, repeat for several (default lex)")
    sp.add_argument("--seeds", type=int, default=10, help="varieties per grid cell")
    sp.add_argument("--seed", type=int, default=0, help="base seed")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--jobs", type=int, default=1,
                    help="parallel processes; timings then include contention")
    sp.add_argument("--out", default=None, help="CSV path (default stdout)")
    sp.add_argument("--summary", default=None, help="summary path (default stderr)")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
