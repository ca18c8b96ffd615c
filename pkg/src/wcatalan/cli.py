"""Command-line front end.

    wcatalan table catalan --n-max 5 --format csv
    wcatalan table w-catalan --w 3 --n-max 5
    wcatalan verify --identity thm1 --n-max 10 --d 1,3,5
    wcatalan verify --all --format json
    wcatalan padic --p 3 --precision 4 --n-max 5

Exit status: 0 all cells pass, 1 some cell failed, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import identities as ids
from .catalan import catalan_poly, require_odd, w_catalan_poly
from .errors import ParityError
from .exact_arith import catalan_number, format_rational
from .padic import (
    DEFAULT_SHIFTS,
    DEFAULT_X_LIST,
    is_odd_prime,
    sweep_eq2_eq3,
    verify_eq11,
)
from .polynomial import format_poly
from .report import IdentityId, VerificationReport, render_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_PRIMES = (3, 5, 7)
DEFAULT_PRECISION = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(";", ",").split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _pair_list(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        vals = _int_list(chunk)
        if len(vals) % 2:
            raise argparse.ArgumentTypeError(f"pairs need an even number of values, got {chunk!r}")
        pairs.extend(zip(vals[0::2], vals[1::2]))
    return pairs


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wcatalan", description="Exact w-Catalan polynomials and identity checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", help="write to this path instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    table = sub.add_parser("table", parents=[common], help="tabulate numbers and polynomials")
    table.add_argument("kind", choices=("catalan", "w-catalan"))
    table.add_argument("--n-max", type=int, default=10)
    table.add_argument("--w", type=int, default=1)

    verify = sub.add_parser("verify", parents=[common], help="run identity verification sweeps")
    which = verify.add_mutually_exclusive_group(required=True)
    which.add_argument("--identity", help="one of: " + ", ".join(i.value for i in IdentityId))
    which.add_argument("--all", action="store_true", help="every identity on its default grid")
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--d", type=_int_list, help="odd values, e.g. 1,3,5")
    verify.add_argument("--w", type=_int_list, help="odd values for single-parameter identities")
    verify.add_argument("--w-pairs", type=_pair_list, help="odd pairs, e.g. '1,3;3,5'")
    verify.add_argument("--p", type=_int_list, help="primes for the p-adic checks")
    verify.add_argument("--precision", type=int)

    padic = sub.add_parser("padic", parents=[common], help="fermionic p-adic integral checks")
    padic.add_argument("--p", type=int, required=True)
    padic.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    padic.add_argument("--n-max", type=int, default=5)
    padic.add_argument("--x", type=_int_list, default=list(DEFAULT_X_LIST))
    padic.add_argument("--shifts", type=_int_list, default=list(DEFAULT_SHIFTS))
    padic.add_argument("--n-cap", type=int)
    return parser


def _table(args: argparse.Namespace) -> str:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if args.kind == "catalan":
        header = ("n", "C_n", "C_n(x)")
        rows = [(n, catalan_number(n), catalan_poly(n)) for n in range(args.n_max + 1)]
    else:
        if args.w < 1:
            raise UsageError("--w must be a positive integer")
        header = ("n", f"C_n,{args.w}", f"C_n,{args.w}(x)")
        rows = []
        for n in range(args.n_max + 1):
            p = w_catalan_poly(n, args.w)
            rows.append((n, p.constant_term, p))
    cells = [(str(n), format_rational(c), format_poly(p)) for n, c, p in rows]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(cells)
        return buf.getvalue()
    if args.format == "json":
        payload = [dict(zip(("n", "number", "polynomial"), (int(a), b, c))) for a, b, c in cells]
        return json.dumps(payload, indent=2) + "\n"
    widths = [max(len(r[i]) for r in [header, *cells]) for i in range(3)]
    return "\n".join("  ".join(v.ljust(wd) for v, wd in zip(r, widths)).rstrip() for r in [header, *cells]) + "\n"


def _one_identity(args: argparse.Namespace) -> list[VerificationReport]:
    try:
        ident = IdentityId.parse(args.identity)
    except ValueError as exc:
        raise UsageError(str(exc))
    n_max = ids.DEFAULT_N_MAX if args.n_max is None else args.n_max
    odd = args.d or args.w or list(ids.DEFAULT_ODD)
    pairs = args.w_pairs or list(ids.DEFAULT_PAIRS)
    for v in [*odd, *(x for pr in pairs for x in pr)]:
        if v < 1 or v % 2 == 0:
            raise ParityError()
    if ident is IdentityId.THM1:
        return [ids.verify_theorem1(n_max, odd)]
    if ident is IdentityId.THM2:
        return [ids.verify_theorem2(n_max, pairs)]
    if ident is IdentityId.COR3:
        return [ids.verify_corollary3(n_max, odd)]
    if ident is IdentityId.COR4:
        return [ids.verify_corollary4(n_max, pairs)]
    if ident is IdentityId.THM5:
        return [ids.verify_theorem5(n_max, pairs)]
    if ident is IdentityId.MULT_FORMULA:
        return [ids.verify_mult_formula(n_max, odd)]
    if ident is IdentityId.EQ6:
        return [ids.verify_eq6(n_max)]
    if ident is IdentityId.EQ14:
        return [ids.verify_eq14(12 if args.n_max is None else n_max + 1, odd)]
    if ident is IdentityId.EQ18:
        return [ids.verify_eq18(n_max + 1, pairs)]
    if ident is IdentityId.EQ17_RATIO:
        eq17_pairs = args.w_pairs or [(1, 3), (3, 5), (3, 7)]
        return [ids.verify_eq17_expansions(8 if args.n_max is None else n_max, eq17_pairs)]
    primes = _primes(args.p or list(DEFAULT_PRIMES))
    m = args.precision or DEFAULT_PRECISION
    n_p = 5 if args.n_max is None else n_max
    if ident is IdentityId.EQ11:
        return [verify_eq11(p, n_p, DEFAULT_X_LIST, m) for p in primes]
    return [sweep_eq2_eq3(p, n_p, DEFAULT_X_LIST, DEFAULT_SHIFTS, m) for p in primes]


def _primes(primes: Sequence[int]) -> list[int]:
    for p in primes:
        if not is_odd_prime(p):
            raise UsageError(f"p must be an odd prime, got {p}")
    return list(primes)


def _verify(args: argparse.Namespace) -> list[VerificationReport]:
    if args.n_max is not None and args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if args.precision is not None and args.precision < 1:
        raise UsageError("--precision must be at least 1")
    if not args.all:
        return _one_identity(args)
    primes = _primes(args.p or list(DEFAULT_PRIMES))
    m = args.precision or DEFAULT_PRECISION
    reports = ids.run_all_symbolic(ids.DEFAULT_N_MAX if args.n_max is None else args.n_max)
    for p in primes:
        reports.append(verify_eq11(p, 5, DEFAULT_X_LIST, m))
    for p in primes:
        reports.append(sweep_eq2_eq3(p, 5, DEFAULT_X_LIST, DEFAULT_SHIFTS, m))
    return reports


def _padic(args: argparse.Namespace) -> list[VerificationReport]:
    _primes([args.p])
    if args.precision < 1:
        raise UsageError("--precision must be at least 1")
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if args.n_cap is not None and args.n_cap < 2:
        raise UsageError("--n-cap must be at least 2")
    require_odd(*args.shifts)
    return [
        verify_eq11(args.p, args.n_max, args.x, args.precision, args.n_cap),
        sweep_eq2_eq3(args.p, args.n_max, args.x, args.shifts, args.precision, args.n_cap),
    ]


def _emit(data: bytes, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "table":
            data = _table(args).encode("utf-8")
            status = EXIT_OK
        else:
            reports = _verify(args) if args.command == "verify" else _padic(args)
            data = render_report(reports, args.format)
            status = EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL
        _emit(data, args.output)
        return status
    except (UsageError, ParityError) as exc:
        print(f"wcatalan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"wcatalan: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
