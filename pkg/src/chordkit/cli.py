"""Command line entry point: ``chordkit <subcommand> ...``.

Exit status is 0 on success, 1 on bad input or a call outside an
operation's domain, and 2 when a verification (theorem or recurrence check)
fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bijection, counting, enumeration, recurrence
from .diagram import ChordError, DomainError, parse_chord, parse_diagram
from .render import RenderSpec, render

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_count(args) -> int:
    if args.method == "brute":
        value = enumeration.count_brute(args.n, args.k)
    else:
        value = counting.count_dp(args.n, args.k)
    _emit(args, str(value))
    return EXIT_OK


def _cmd_table(args) -> int:
    table = counting.build_table(args.max_n)
    _emit(args, table.to_csv() if args.format == "csv" else table.to_json())
    if args.figure:
        from .plotting import save_table_figure

        save_table_figure(table, args.figure)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    lines = [str(d) for d in enumeration.enumerate_diagrams(args.n, args.k)]
    _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_alpha(args) -> int:
    _emit(args, str(bijection.alpha(parse_diagram(args.diagram), args.k, args.i)))
    return EXIT_OK


def _cmd_beta(args) -> int:
    _emit(args, str(bijection.beta(parse_diagram(args.diagram), args.k)))
    return EXIT_OK


def _cmd_class_index(args) -> int:
    _emit(args, str(bijection.class_index(parse_diagram(args.diagram), args.k)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = bijection.verify_theorem(args.n, args.k, args.mode)
    _emit(args, report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if report.passed else EXIT_VERIFY


def _load_sequence(args) -> tuple[int, list[int]]:
    if args.seq:
        return recurrence.read_sequence_csv(Path(args.seq).read_text())
    if args.k is None or args.max_n is None:
        raise DomainError("give --seq FILE, or --k and --max-n")
    start = args.from_n if args.from_n is not None else 1
    if start < 1:
        raise DomainError("--from-n must be >= 1")
    return start, [counting.count_dp(n, args.k) for n in range(start, args.max_n + 1)]


def _cmd_check_recurrence(args) -> int:
    if args.spec:
        spec = recurrence.RecurrenceSpec.from_json(Path(args.spec).read_text())
    elif args.builtin == "k2":
        spec = recurrence.K2_RECURRENCE
    elif args.builtin == "k3":
        spec = recurrence.K3_RECURRENCE
    else:
        raise DomainError("give --spec FILE or --builtin k2|k3")
    offset, seq = _load_sequence(args)
    report = recurrence.check_recurrence(spec, seq, offset)
    bad = report.failures()
    if not bad:
        _emit(args, f"pass: {len(report.residuals)} residuals, all zero ({spec.describe()})")
        return EXIT_OK
    lines = [f"FAIL: {len(bad)} of {len(report.residuals)} residuals nonzero"]
    lines += [f"  n={n}: residual {r}" for n, r in bad]
    _emit(args, "\n".join(lines))
    return EXIT_VERIFY


def _cmd_fit_recurrence(args) -> int:
    offset, seq = _load_sequence(args)
    if args.order is not None:
        degree = args.degree if args.degree is not None else 1
        result = recurrence.fit_recurrence(
            seq, offset, args.order, degree, args.validation, monic=not args.free_leading
        )
    else:
        result = recurrence.search_recurrence(
            seq, offset, args.max_order, args.max_degree, args.validation, monic=not args.free_leading
        )
    if result is None or not result.found:
        verdict = "none" if result is None else result.status
        if result is not None and result.status == "underdetermined":
            verdict += f" (nullity {result.nullity})"
        _emit(args, verdict)
        return EXIT_OK
    _emit(args, result.spec.to_json())
    print(result.spec.describe(), file=sys.stderr)
    return EXIT_OK


def _cmd_render(args) -> int:
    d = parse_diagram(args.diagram)
    marked = parse_chord(args.mark) if args.mark else None
    _emit(args, render(d, RenderSpec(args.format, args.highlight_k, marked)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chordkit", allow_abbrev=False, description="Linear chord diagrams with a minimum chord length.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--out", help="write output to FILE instead of stdout")
        return sp

    sp = add("count", _cmd_count, "count diagrams of size n with chords of length >= k")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=["dp", "brute"], default="dp")

    sp = add("table", _cmd_table, "table of counts for 1 <= k <= n <= max-n")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--figure", help="also save a matplotlib figure of the table to FILE")

    sp = add("enumerate", _cmd_enumerate, "list diagrams, one per line")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)

    sp = add("alpha", _cmd_alpha, "apply the insert-and-swap map")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--diagram", required=True)

    sp = add("beta", _cmd_beta, "apply the swap-and-delete map")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--diagram", required=True)

    sp = add("class-index", _cmd_class_index, "side-chord starts left of the marked chord")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--diagram", required=True)

    sp = add("verify-theorem", _cmd_verify, "check |M_{k+1}^{n+1}| = (n-k+1)|M_k^n|")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mode", choices=["counts", "exhaustive"], default="counts")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    for name, func, help_ in (
        ("check-recurrence", _cmd_check_recurrence, "check a recurrence against a row"),
        ("fit-recurrence", _cmd_fit_recurrence, "guess a recurrence for a row"),
    ):
        sp = add(name, func, help_)
        sp.add_argument("--seq", help="CSV of n,value rows")
        sp.add_argument("--k", type=int, help="use the row for this k")
        sp.add_argument("--max-n", type=int)
        sp.add_argument("--from-n", type=int, help="first n of the row (default 1)")
        if name == "check-recurrence":
            sp.add_argument("--spec", help="recurrence JSON file")
            sp.add_argument("--builtin", choices=["k2", "k3"])
        else:
            sp.add_argument("--order", type=int)
            sp.add_argument("--degree", type=int)
            sp.add_argument("--max-order", type=int, default=8)
            sp.add_argument("--max-degree", type=int, default=2)
            sp.add_argument("--validation", type=int, default=recurrence.DEFAULT_VALIDATION)
            sp.add_argument("--free-leading", action="store_true",
                            help="let the coefficient of a(n) be a polynomial in n too")

    sp = add("render", _cmd_render, "draw a diagram as SVG or TikZ")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--format", choices=["svg", "tikz"], default="svg")
    sp.add_argument("--highlight-k", type=int, help="bold the chords touching the middle block for this k")
    sp.add_argument("--mark", help="chord s-e to draw dashed")
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"chordkit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ChordError, OSError, json.JSONDecodeError) as exc:
        print(f"chordkit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
