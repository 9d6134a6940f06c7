"""
Command-line front end.

Exit codes: 0 success, 1 usage error or failed verification, 2 malformed
permutation or basis text, 3 node budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classifier import Basis, verdict_json
from .degree import BetaShape, degree_of, irreducible_levels
from .enumerator import DEFAULT_MAX_NODES, InsufficientData, count_avoiders, fit_eventual_polynomial
from .errors import BudgetExceeded, Discrepancy, InvalidInput
from .genfunc import check_g_laws, f_series, g_poly
from .perms import Perm
from .structural import PeggedPattern, inflate, parse_signs
from .verify import SUITES

EXIT_OK, EXIT_USAGE, EXIT_SYNTAX, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class SyntaxProblem(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _basis(text: str) -> Basis:
    try:
        return Basis.parse(text)
    except InvalidInput as exc:
        raise SyntaxProblem(f"bad basis {text!r}: {exc}") from exc


def _perm(text: str) -> Perm:
    try:
        return Perm.parse(text)
    except InvalidInput as exc:
        raise SyntaxProblem(f"bad permutation {text!r}: {exc}") from exc


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _frac_list(values) -> list[str]:
    return [str(c) for c in values]


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value) if value else "-"
    return str(value)


def _table_lines(data, prefix: str = "") -> list[str]:
    """Flatten a JSON-like value into key<TAB>value lines."""
    lines = []
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            lines.extend(_table_lines(value, name + "."))
        else:
            lines.append(f"{name}\t{_cell(value)}")
    return lines


def _emit(data: dict, as_json: bool, out, table: Optional[list[str]] = None) -> None:
    if as_json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write("\n".join(table if table is not None else _table_lines(data)) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args, out, err) -> int:
    _emit(verdict_json(_basis(args.basis)), args.json, out)
    return EXIT_OK


def cmd_count(args, out, err) -> int:
    basis = _basis(args.basis)
    counts = count_avoiders(basis, args.max_n, args.max_nodes)
    data = {"basis": str(basis), "counts": list(counts)}
    table = ["n\tc_n"] + [f"{n}\t{c}" for n, c in enumerate(counts)]
    _emit(data, args.json, out, table)
    return EXIT_OK


def cmd_fit(args, out, err) -> int:
    basis = _basis(args.basis)
    fit = fit_eventual_polynomial(count_avoiders(basis, args.max_n, args.max_nodes))
    _emit(fit.to_json(), args.json, out)
    return EXIT_OK if not isinstance(fit, InsufficientData) else EXIT_USAGE


def cmd_degree(args, out, err) -> int:
    report = degree_of(args.r, BetaShape(args.p, args.q), args.max_nodes)
    _emit(report.to_json(), args.json, out)
    if report.exact_degree is None:
        print(f"exact degree not computed: {report.note}", file=err)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_genfunc(args, out, err) -> int:
    laws = None
    if args.r >= 2:
        row = check_g_laws(args.r).rows[-1]
        laws = {"degree_ok": row["degree_ok"], "leading_ok": row["leading_ok"]}
    data = {
        "r": args.r,
        "order": args.order,
        "G": _frac_list(g_poly(args.r).coeffs),
        "F": _frac_list(f_series(args.r, args.order).coeffs) if args.r >= 1 else [],
        "laws": laws,
    }
    _emit(data, args.json, out)
    return EXIT_OK


def cmd_irreducibles(args, out, err) -> int:
    levels = irreducible_levels(args.r, BetaShape(args.p, args.q), args.max_nodes)
    by_length = {str(n): [str(p) for p in level] for n, level in enumerate(levels) if level}
    data = {"r": args.r, "p": args.p, "q": args.q,
            "count": sum(len(v) for v in by_length.values()), "by_length": by_length}
    _emit(data, args.json, out)
    return EXIT_OK


def cmd_inflate(args, out, err) -> int:
    signs = parse_signs(args.signs.replace("p", "+").replace("m", "-"))
    peg = PeggedPattern(_perm(args.skeleton), signs)
    try:
        lengths = [_nonneg(tok) for tok in args.lengths.replace(",", " ").split()]
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"--lengths: {exc}") from exc
    result = inflate(peg, lengths)
    _emit({"peg": str(peg), "lengths": lengths, "permutation": str(result)}, args.json, out)
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    kwargs = {"max_nodes": args.max_nodes}
    report = SUITES[args.suite](**kwargs)
    table = [f"{c.status}\t{c.name}\texpected={c.expected}\tactual={c.actual}" for c in report.checks]
    summary = report.to_json()
    table.append(f"summary\tpassed={summary['passed']}\tfailed={summary['failed']}\tbudget={summary['budget']}")
    _emit(summary, args.json, out, table)
    return report.exit_code()


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit a single JSON document instead of a table")
    parser.add_argument("--max-nodes", type=_nonneg, default=default(DEFAULT_MAX_NODES),
                        help="cap on candidate extensions for searches (default 10^7)")
    parser.add_argument("--seed-free", action="store_true", default=default(False),
                        help="accepted for pipelines; every operation is already deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyperm", description="Polynomial growth of permutation classes.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "polynomial-growth verdict for a basis")
    p.add_argument("--basis", required=True, help='space-separated permutations, e.g. "132 321"')

    p = add("count", cmd_count, "count avoiders of each length 0..N")
    p.add_argument("--basis", required=True)
    p.add_argument("--max-n", type=_nonneg, required=True)

    p = add("fit", cmd_fit, "fit the eventual counting polynomial from counts up to N")
    p.add_argument("--basis", required=True)
    p.add_argument("--max-n", type=_nonneg, required=True)

    for name, func, text in [("degree", cmd_degree, "exact degree of Av(12..r, beta_pq)"),
                             ("irreducibles", cmd_irreducibles, "irreducible members of Av(12..r, beta_pq)")]:
        p = add(name, func, text)
        p.add_argument("--r", type=_nonneg, required=True)
        p.add_argument("--p", type=_nonneg, required=True)
        p.add_argument("--q", type=_nonneg, required=True)

    p = add("genfunc", cmd_genfunc, "G_r and the series F_r of Av(12..r, 231)")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--order", type=_nonneg, required=True)

    p = add("inflate", cmd_inflate, "inflate a signed skeleton")
    p.add_argument("--skeleton", required=True)
    p.add_argument("--signs", required=True, help='e.g. "+-", or "pm" with p for + and m for -')
    p.add_argument("--lengths", required=True, help='run lengths, e.g. "2 2"')

    p = add("verify", cmd_verify, "run a self-check suite")
    p.add_argument("suite", choices=sorted(SUITES))
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except SyntaxProblem as exc:
        print(f"error: {exc}", file=err)
        return EXIT_SYNTAX
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=err)
        return EXIT_BUDGET
    except (InvalidInput, Discrepancy) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
