"""Command-line entry point.

Exit codes: 0 success, 1 usage or domain error, 2 computation error.
"""
from __future__ import annotations

import argparse
import sys

from .constants import DEFAULT_DIGITS, align_decimals, build_bank, fixed_decimal
from .errors import ComputationError, DomainError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _integer(text: str) -> int:
    value = _number(text)
    if not value.is_integer():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> None:
    from .arith import build_tables
    from .groups import c_count, s_count

    tables = build_tables(max(args.m * args.n, 1)) if args.m * args.n <= 10**7 else None
    if args.variant == "s":
        value = s_count(args.m, args.n, args.formula or "F3", tables)
    else:
        value = c_count(args.m, args.n, args.formula or "C4", tables)
    _emit(args, f"{value}\n")


def cmd_oracle(args) -> None:
    from .groups import enumerate_subgroups

    total, cyclic = enumerate_subgroups(args.m, args.n, cap=args.cap)
    _emit(args, f"subgroups {total}\ncyclic {cyclic}\n")


def cmd_summatory(args) -> None:
    from .summatory import summatory

    res = summatory(args.variant, args.weighted, args.x, args.algo)
    value = format(res.value, ".17g") if args.weighted else str(res.value)
    _emit(args, f"value {value}\nelapsed {res.elapsed:.3f}\n")


def cmd_series_check(args) -> None:
    from .summatory import dirichlet_truncation

    partial, closed = dirichlet_truncation(args.variant, args.z, args.w, args.trunc,
                                           digits=max(args.precision, 15))
    _emit(args, f"partial {partial:.17g}\nclosed {closed:.17g}\ngap {closed - partial:.17g}\n")


def cmd_coeffs(args) -> None:
    from .residue import coefficients

    bank = build_bank(args.precision)
    poly = coefficients(args.variant, args.weight_order, args.route, bank)
    lines = [fixed_decimal(c, args.precision) for c in reversed(poly.coeffs)]
    _emit(args, "\n".join(lines) + "\n")


def cmd_constants(args) -> None:
    bank = build_bank(args.precision)
    rows = bank.rows()
    width = max(len(name) for name, _ in rows)
    values = align_decimals([val for _, val in rows])
    _emit(args, "".join(f"{name:<{width}}  {val}\n" for (name, _), val in zip(rows, values)))


def cmd_scan(args) -> None:
    from .analysis import error_scan, records_to_csv
    from .residue import coefficients

    poly = coefficients(args.variant, 2, "series", build_bank(args.precision))
    records = error_scan(args.variant, args.x_from, args.x_to, args.points_per_decade, poly,
                         threads=args.threads)
    _emit(args, records_to_csv(records))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision", type=_integer, default=DEFAULT_DIGITS,
                        help="working precision in decimal digits (default 50)")
    common.add_argument("--threads", type=_integer, default=None,
                        help="worker threads for scans (default: all)")
    common.add_argument("--out", default=None, help="output path (default stdout)")

    parser = _Parser(prog="zmn-subgroups",
                     description="Subgroup counts of Z_m x Z_n and their summatory functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="s(m,n) or c(m,n) by a closed formula")
    p.add_argument("--m", type=_integer, required=True)
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--variant", choices=("s", "c"), default="s")
    p.add_argument("--formula", choices=("F1", "F2", "F3", "C1", "C2", "C3", "C4"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("oracle", parents=[common], help="brute-force subgroup enumeration")
    p.add_argument("--m", type=_integer, required=True)
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--cap", type=_integer, default=10_000)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("summatory", parents=[common], help="D or D~ over mn <= x")
    p.add_argument("--variant", choices=("s", "c"), default="s")
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--x", type=_number, required=True)
    p.add_argument("--algo", choices=("naive", "reduced"), default="reduced")
    p.set_defaults(func=cmd_summatory)

    p = sub.add_parser("series-check", parents=[common],
                       help="truncated double Dirichlet series vs zeta closed form")
    p.add_argument("--variant", choices=("s", "c"), default="s")
    p.add_argument("--z", type=_number, required=True)
    p.add_argument("--w", type=_number, required=True)
    p.add_argument("--trunc", type=_integer, required=True)
    p.set_defaults(func=cmd_series_check)

    p = sub.add_parser("coeffs", parents=[common], help="main-term coefficients B_4..B_0")
    p.add_argument("--variant", choices=("s", "c"), default="s")
    p.add_argument("--weight-order", type=_integer, choices=(1, 2), default=2)
    p.add_argument("--route", choices=("series", "closedform", "gderiv"), default="series")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("constants", parents=[common], help="Stieltjes constants and zeta^(j)(2)")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("scan", parents=[common], help="error-term scan, CSV output")
    p.add_argument("--variant", choices=("s", "c"), default="s")
    p.add_argument("--from", dest="x_from", type=_number, required=True)
    p.add_argument("--to", dest="x_to", type=_number, required=True)
    p.add_argument("--points-per-decade", type=_integer, default=4)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.precision < 15:
            raise DomainError(f"--precision must be >= 15, got {args.precision}")
        args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
