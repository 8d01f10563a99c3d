"""Command-line front end: ``geomseq {gen,lc,acf,verify,sweep}``.

Every command validates its arguments before computing anything and writes
its output atomically, so a failed run never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from collections import Counter

from . import __version__
from ._validation import ParameterError, check_alphabet, check_degree, check_odd_prime, is_prime
from .correlate import autocorrelation_profile, profile_to_csv
from .gf import ExtFieldContext
from .lincomp import berlekamp_massey, minimal_poly_gcd
from .poly import format_sparse, to_hex
from .seqgen import build_sequence, to_bytes, to_text
from .theorems import (
    InconsistentPredictionError,
    SCHEMA_VERSION,
    any_violated,
    report_csv,
    report_json,
    report_rows,
    report_table,
    run_sweep,
    verify_tuple,
)

EXIT_PRECONDITION = 2
EXIT_VIOLATED = 1
EXIT_INCONSISTENT = 3


# argument parsing helpers

def parse_int_list(text: str) -> list[int]:
    """``"3,5,11-17"`` -> ``[3, 5, 11, 12, ..., 17]``; ranges are inclusive."""
    out: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        lo, sep, hi = item.partition("-")
        try:
            if sep and lo:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(item))
        except ValueError:
            raise ParameterError(f"cannot read {item!r} as an integer or an inclusive range lo-hi") from None
    return sorted(set(out))


def parse_poly(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise ParameterError(f"--poly expects comma-separated ascending coefficients, got {text!r}") from None


def resolve_A(selector: str, ctx: ExtFieldContext, ell: int) -> int:
    """A literal residue, or the smallest nonzero residue in / outside ``D_0``."""
    if selector in ("residue", "nonresidue"):
        cyc = ctx.cyclotomy(ell)
        want_d0 = selector == "residue"
        for a in range(1, ctx.p):
            if (cyc.class_of[a] == 0) == want_d0:
                return a
        raise ParameterError(f"no {selector} exists mod {ctx.p}")  # unreachable for ell | p - 1
    try:
        return int(selector) % ctx.p
    except ValueError:
        raise ParameterError(f"--A must be an integer, 'residue' or 'nonresidue', got {selector!r}") from None


def resolve_A_set(selector: str, p: int, ell: int, ctx: ExtFieldContext) -> list[int]:
    if selector == "all":
        return list(range(p))
    if selector == "nonzero":
        return list(range(1, p))
    if selector in ("residue", "nonresidue"):
        return [resolve_A(selector, ctx, ell)]
    return sorted({a % p for a in parse_int_list(selector)})


def resolve_shifts(text: str | None, N: int) -> list[int] | None:
    if text is None or text == "none":
        return None
    if text == "all":
        return list(range(N))
    shifts = parse_int_list(text)
    bad = [e for e in shifts if not 0 <= e < N]
    if bad:
        raise ParameterError(f"e must lie in [0, {N - 1}], got {bad[0]}")
    return shifts


# output

def write_output(data: str | bytes, out: str | None) -> None:
    """Write to ``out`` via a temporary file and rename, or to stdout."""
    if out is None:
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        else:
            sys.stdout.write(data)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".geomseq-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data if isinstance(data, bytes) else data.encode())
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _context(args) -> ExtFieldContext:
    ctx = ExtFieldContext(args.p, args.m, parse_poly(args.poly))
    check_alphabet(args.ell, ctx.p)
    return ctx


def _sequence(args):
    ctx = _context(args)
    A = resolve_A(args.A, ctx, args.ell)
    e = None
    if args.seq == "Se":
        if args.e is None:
            raise ParameterError("--seq Se needs --e")
        try:
            e = int(args.e)
        except ValueError:
            raise ParameterError(f"--e must be a single integer here, got {args.e!r}") from None
    return build_sequence(ctx, args.ell, A, args.seq, e)


def _params_json(params: dict) -> dict:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()}


# subcommands

def cmd_gen(args) -> int:
    seq = _sequence(args)
    if args.format == "text":
        data = to_text(seq)
    elif args.format == "bin":
        data = to_bytes(seq)
    elif args.format == "csv":
        data = "n,symbol\n" + "".join(f"{n},{int(s)}\n" for n, s in enumerate(seq.symbols))
    else:
        doc = {"schema": SCHEMA_VERSION, "params": _params_json(seq.params), "period": seq.period,
               "symbols": seq.tolist()}
        data = json.dumps(doc, sort_keys=True) + "\n"
    write_output(data, args.out)
    return 0


def cmd_lc(args) -> int:
    seq = _sequence(args)
    methods = {"both": ("gcd", "berlekamp_massey"), "gcd": ("gcd",), "bm": ("berlekamp_massey",)}[args.method]
    reports = [minimal_poly_gcd(seq) if m == "gcd" else berlekamp_massey(seq) for m in methods]
    if len({(r.linear_complexity, r.minimal_poly) for r in reports}) > 1:
        raise InconsistentPredictionError(
            "methods disagree: " + ", ".join(f"{r.method}={r.linear_complexity}" for r in reports))
    if args.format == "json":
        doc = {"schema": SCHEMA_VERSION, "params": _params_json(seq.params), "period": seq.period,
               "reports": [{"method": r.method, "linear_complexity": r.linear_complexity,
                            "minimal_poly": format_sparse(r.minimal_poly),
                            "minimal_poly_hex": to_hex(r.minimal_poly)} for r in reports]}
        data = json.dumps(doc, sort_keys=True) + "\n"
    elif args.format == "csv":
        data = "method,period,linear_complexity,minimal_poly\n" + "".join(
            f"{r.method},{seq.period},{r.linear_complexity},{format_sparse(r.minimal_poly)}\n" for r in reports)
    else:
        data = "".join(f"{r.method}: period={seq.period} L={r.linear_complexity} m(x)={format_sparse(r.minimal_poly)}\n"
                       for r in reports)
    write_output(data, args.out)
    return 0


def cmd_acf(args) -> int:
    seq = _sequence(args)
    profile = autocorrelation_profile(seq)
    if args.format == "json":
        doc = {"schema": SCHEMA_VERSION, "params": _params_json(seq.params), "values": profile.values.tolist(),
               "distribution": {str(k): v for k, v in profile.distribution.items()}}
        data = json.dumps(doc, sort_keys=True) + "\n"
    elif args.format == "text":
        data = f"period={profile.period}\n" + "".join(f"{v}: {c}\n" for v, c in profile.distribution.items())
    else:
        data = profile_to_csv(profile)
    write_output(data, args.out)
    return 0


def _render_report(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return report_json(rows)
    if fmt == "csv":
        return report_csv(rows)
    return report_table(rows)


def _summarize(rows: list[dict]) -> None:
    counts = Counter(r["status"] for r in rows)
    summary = ", ".join(f"{k}={counts[k]}" for k in sorted(counts)) or "no rows"
    print(f"{len(rows)} predictions: {summary}", file=sys.stderr)


def cmd_verify(args) -> int:
    ctx = _context(args)
    A = resolve_A(args.A, ctx, args.ell)
    shifts = resolve_shifts(args.e, ctx.order)
    rows = report_rows(verify_tuple(ctx.p, ctx.m, A, shifts, args.ell, ctx=ctx, bm_limit=args.bm_limit))
    write_output(_render_report(rows, args.format), args.out)
    _summarize(rows)
    return EXIT_VIOLATED if any_violated(rows) else 0


def sweep_tasks(args) -> list[tuple]:
    """Expand the grid; tuples whose (p, m, ell) is not admissible are skipped."""
    poly = parse_poly(args.poly)
    tasks = []
    for p in parse_int_list(args.p):
        if p < 3 or not is_prime(p) or (p - 1) % args.ell:
            continue
        for m in parse_int_list(args.m):
            check_degree(m)
            ctx = ExtFieldContext(p, m, poly)
            shifts = resolve_shifts(args.e, ctx.order)
            for A in resolve_A_set(args.A, p, args.ell, ctx):
                task_shifts = tuple(shifts) if shifts is not None and args.ell == 2 else None
                tasks.append((p, m, args.ell, A, task_shifts, poly, args.bm_limit))
    return tasks


def cmd_sweep(args) -> int:
    if args.poly is not None and "," in args.m:
        raise ParameterError("--poly fixes the degree, so --m must be a single value")
    if not is_prime(args.ell):
        raise ParameterError(f"ell must be prime, got {args.ell}")
    rows = run_sweep(sweep_tasks(args), jobs=args.jobs)
    write_output(_render_report(rows, args.format), args.out)
    _summarize(rows)
    return EXIT_VIOLATED if any_violated(rows) else 0


# parser

def _common(sub: argparse.ArgumentParser, *, sweep: bool = False) -> None:
    if sweep:
        sub.add_argument("--p", required=True, help="primes: list and inclusive ranges, e.g. 3,5,7-31")
        sub.add_argument("--m", default="2", help="extension degrees, same syntax as --p")
        sub.add_argument("--A", default="nonzero",
                         help="all, nonzero, residue, nonresidue, or a list of residues")
        sub.add_argument("--e", default="none", help="shifts: none, all, or a list / range")
    else:
        sub.add_argument("--p", type=int, required=True, help="odd prime")
        sub.add_argument("--m", type=int, required=True, help="extension degree, > 1")
        sub.add_argument("--A", default="1", help="residue, or 'residue' / 'nonresidue' for the smallest one")
        sub.add_argument("--e", default=None, help="interleaving shift")
    sub.add_argument("--ell", type=int, default=2, help="alphabet size, a prime dividing p - 1")
    sub.add_argument("--poly", default=None, help="primitive polynomial, ascending coefficients: 2,2,1")
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geomseq", description="Generalized NTU geometric sequences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)
    seq_choices = ("T", "t", "Tbar", "tbar", "Se")

    gen = subs.add_parser("gen", help="write one period of a sequence")
    _common(gen)
    gen.add_argument("--seq", choices=seq_choices, default="T")
    gen.add_argument("--format", choices=("text", "bin", "csv", "json"), default="text")
    gen.set_defaults(func=cmd_gen)

    lc = subs.add_parser("lc", help="linear complexity and minimal polynomial")
    _common(lc)
    lc.add_argument("--seq", choices=seq_choices, default="T")
    lc.add_argument("--method", choices=("both", "gcd", "bm"), default="both")
    lc.add_argument("--format", choices=("text", "csv", "json"), default="text")
    lc.set_defaults(func=cmd_lc)

    acf = subs.add_parser("acf", help="periodic autocorrelation profile")
    _common(acf)
    acf.add_argument("--seq", choices=seq_choices, default="T")
    acf.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    acf.set_defaults(func=cmd_acf)

    for name, func, sweep in (("verify", cmd_verify, False), ("sweep", cmd_sweep, True)):
        sub = subs.add_parser(name, help="check predictions against measurement" if not sweep
                              else "verify a parameter grid in parallel")
        _common(sub, sweep=sweep)
        sub.add_argument("--format", choices=("text", "csv", "json"), default="text")
        sub.add_argument("--bm-limit", type=int, default=4096,
                         help="also run Berlekamp-Massey for periods up to this length")
        if sweep:
            sub.add_argument("--jobs", type=int, default=1)
        sub.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "p") and not isinstance(args.p, str):
            check_odd_prime(args.p)
        return args.func(args)
    except InconsistentPredictionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
