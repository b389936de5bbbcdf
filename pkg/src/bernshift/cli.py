"""Command-line surface: values, tables, psi sums, denominators, and sweeps.

Exit codes: 0 = success / all checks pass, 1 = a mathematical check failed
(the witness is printed), 2 = usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .bernoulli import BernoulliCache
from .denom import denom_formula, psi
from .errors import InvariantViolation
from .exact_arith import is_prime
from .render import (
    CSV,
    FORMATS,
    JSON,
    LATEX,
    PLAIN,
    json_int,
    render_coefficients,
    render_fraction_table,
    render_fraction_value,
    render_int_table,
    render_json,
)
from .umbral import bs_direct, bs_polynomial, bs_table_recursive
from .verify import PROPERTIES, report_payload, report_text, run_verify


class UsageError(Exception):
    """Bad arguments detected after parsing; reported on stderr with exit 2."""


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _cache_for(r: int, s: int) -> BernoulliCache:
    return BernoulliCache(r + s + 2)


def cmd_value(args: argparse.Namespace) -> int:
    cache = _cache_for(args.r, args.s)
    if args.poly:
        coeffs = bs_polynomial(cache, args.r, args.s).coeffs
        sys.stdout.write(render_coefficients(coeffs, args.fmt))
    else:
        sys.stdout.write(render_fraction_value(bs_direct(cache, args.r, args.s), args.fmt))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    cache = _cache_for(args.max_r, args.max_s)
    table = bs_table_recursive(cache, args.max_r, args.max_s)
    grid = [
        [table[r, s] for s in range(args.max_s + 1)] for r in range(args.max_r + 1)
    ]
    if args.denoms:
        sys.stdout.write(
            render_int_table([[q.denominator for q in row] for row in grid], args.fmt)
        )
    else:
        sys.stdout.write(render_fraction_table(grid, args.fmt))
    return 0


def cmd_psi(args: argparse.Namespace) -> int:
    if args.p < 2 or not is_prime(args.p):
        raise UsageError(f"p must be prime, got {args.p}")
    result = psi(args.r, args.s, args.p)
    if args.fmt == JSON:
        payload: dict[str, object] = {
            "r": args.r,
            "s": args.s,
            "p": args.p,
            "value": json_int(result.value),
        }
        if args.show_indices:
            payload["indices"] = list(result.index_set)
        sys.stdout.write(render_json(payload))
    elif args.fmt == LATEX:
        sys.stdout.write(f"${result.value}$\n")
    elif args.fmt == CSV:
        sys.stdout.write(f"{result.value}\r\n")
    else:
        if args.show_indices:
            inside = ", ".join(f"ν={v}" for v in result.index_set)
            sys.stdout.write(f"{result.value}  {{{inside}}}\n")
        else:
            sys.stdout.write(f"{result.value}\n")
    return 0


def cmd_denom(args: argparse.Namespace) -> int:
    fact = denom_formula(args.r, args.s)
    if args.fmt == JSON:
        sys.stdout.write(
            render_json(
                {
                    "r": args.r,
                    "s": args.s,
                    "value": json_int(fact.value),
                    "eps2": fact.eps2,
                    "primes": list(fact.primes),
                }
            )
        )
    elif args.fmt == LATEX:
        sys.stdout.write(f"${fact.value}$\n")
    elif args.fmt == CSV:
        sys.stdout.write(f"{fact.value}\r\n")
    elif args.factor:
        parts = (["2"] if fact.eps2 else []) + [str(p) for p in fact.primes]
        sys.stdout.write(f"{fact.value} = {' * '.join(parts) if parts else '1'}\n")
    else:
        sys.stdout.write(f"{fact.value}\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.fmt not in (PLAIN, JSON):
        raise UsageError(f"verify supports --format plain or json, not {args.fmt}")
    spec = PROPERTIES[args.property]
    max_r = spec.default_r if args.max_r is None else args.max_r
    max_s = spec.default_s if args.max_s is None else args.max_s
    report = run_verify(args.property, max_r, max_s, jobs=args.jobs)
    if args.fmt == JSON:
        sys.stdout.write(render_json(report_payload(report)))
    else:
        sys.stdout.write(report_text(report))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", dest="fmt", choices=FORMATS, default=PLAIN, help="output format"
    )
    common.add_argument(
        "--jobs", type=_positive, default=1, help="worker processes for sweeps"
    )

    parser = argparse.ArgumentParser(
        prog="bernshift",
        description="Exact shifted-sum Bernoulli numbers, their denominators, and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser(
        "value", parents=[common], help="one exact value B[r,s], or its polynomial"
    )
    p_value.add_argument("r", type=_nonnegative)
    p_value.add_argument("s", type=_nonnegative)
    p_value.add_argument(
        "--poly", action="store_true", help="coefficients of B[r,s](x), lowest power first"
    )
    p_value.set_defaults(func=cmd_value)

    p_table = sub.add_parser(
        "table", parents=[common], help="grid of B[r,s] for 0 <= r <= max_r, 0 <= s <= max_s"
    )
    p_table.add_argument("max_r", type=_nonnegative)
    p_table.add_argument("max_s", type=_nonnegative)
    p_table.add_argument(
        "--denoms", action="store_true", help="render the denominators instead of the values"
    )
    p_table.set_defaults(func=cmd_table)

    p_psi = sub.add_parser(
        "psi", parents=[common], help="binomial sum psi(r, s; p) over shifted multiples of p-1"
    )
    p_psi.add_argument("r", type=_nonnegative)
    p_psi.add_argument("s", type=_nonnegative)
    p_psi.add_argument("p", type=int)
    p_psi.add_argument(
        "--show-indices", action="store_true", help="also print the contributing indices"
    )
    p_psi.set_defaults(func=cmd_psi)

    p_denom = sub.add_parser(
        "denom", parents=[common], help="denominator of B[r,s] by the closed product formula"
    )
    p_denom.add_argument("r", type=_nonnegative)
    p_denom.add_argument("s", type=_nonnegative)
    p_denom.add_argument(
        "--factor", action="store_true", help="print the prime factorization"
    )
    p_denom.set_defaults(func=cmd_denom)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="sweep one property over a range and report"
    )
    p_verify.add_argument("property", choices=sorted(PROPERTIES))
    p_verify.add_argument("--max-r", type=_nonnegative, default=None)
    p_verify.add_argument("--max-s", type=_nonnegative, default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"FALSIFIED: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
