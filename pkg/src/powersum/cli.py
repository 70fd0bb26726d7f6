"""``powersum`` command-line front end.

Exit codes: 0 success, 1 verification failure (``check``, ``bench``),
2 usage or parse error. Payload goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import statistics
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import engine
from .oracle import (
    DEFAULT_N_MAX,
    DEFAULT_R_MAX,
    VerificationReport,
    Witness,
    brute_force_sum,
    check_closed_form,
    finite_difference_check,
    integrality_check,
)
from .poly import Polynomial, format_latex, format_text, poly_eval
from .rational import format_rational, parse_rational, rat_to_integer

FORMATS = ("text", "latex", "json", "csv")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_DECIMAL = re.compile(r"-?[0-9]+")


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str = ""
    stderr: str = ""


class UsageError(Exception):
    pass


def _ok(text: str) -> CommandResult:
    return CommandResult(EXIT_OK, text if text.endswith("\n") else text + "\n")


def _dumps(payload) -> str:
    return json.dumps(payload)


# -- formula / table ---------------------------------------------------------


def formula_to_json(r: int, p: Polynomial) -> dict:
    return {
        "r": r,
        "terms": [
            {"power": k, "coefficient": format_rational(c)} for k, c in p.terms()
        ],
    }


def formula_from_json(payload: dict):
    """Inverse of :func:`formula_to_json`; returns ``(r, polynomial)``."""
    terms = [(t["power"], parse_rational(t["coefficient"])) for t in payload["terms"]]
    return payload["r"], Polynomial.from_terms(terms)


def _latex_sum(r: int, p: Polynomial) -> str:
    return rf"\sum_{{n=1}}^{{N}} n^{{{r}}} = {format_latex(p)}"


def render_formula(r: int, p: Polynomial, fmt: str) -> str:
    if fmt == "text":
        return format_text(p)
    if fmt == "latex":
        return _latex_sum(r, p)
    if fmt == "json":
        return _dumps(formula_to_json(r, p))
    if fmt == "csv":
        rows = ["power,coefficient"]
        rows += [f"{k},{format_rational(c)}" for k, c in p.terms()]
        return "\n".join(rows)
    raise UsageError(f"unknown format {fmt!r}")


def cmd_formula(r: int, fmt: str = "text") -> CommandResult:
    return _ok(render_formula(r, engine.power_sum_recursive(r), fmt))


def cmd_table(r_max: int, fmt: str = "text") -> CommandResult:
    table = engine.build_table(r_max)
    if fmt == "text":
        out = "\n".join(f"{r}: {format_text(p)}" for r, p in enumerate(table))
    elif fmt == "latex":
        out = " \\\\\n".join(_latex_sum(r, p) for r, p in enumerate(table))
    elif fmt == "json":
        out = _dumps({"table": [formula_to_json(r, p) for r, p in enumerate(table)]})
    elif fmt == "csv":
        rows = ["r,power,coefficient"]
        for r, p in enumerate(table):
            rows += [f"{r},{k},{format_rational(c)}" for k, c in p.terms()]
        out = "\n".join(rows)
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return _ok(out)


# -- eval / bernoulli ----------------------------------------------------------


def cmd_eval(r: int, N: int, fmt: str = "text") -> CommandResult:
    if N < 1:
        raise UsageError(f"N must be >= 1, got {N}")
    value = rat_to_integer(poly_eval(engine.power_sum_recursive(r), N))
    if fmt == "json":
        return _ok(_dumps({"r": r, "N": str(N), "value": str(value)}))
    return _ok(str(value))


def cmd_bernoulli(j_max: int, fmt: str = "text") -> CommandResult:
    values = engine.bernoulli_numbers(j_max)[: j_max + 1]
    if fmt == "text":
        out = "\n".join(f"{j},{format_rational(b)}" for j, b in enumerate(values))
    elif fmt == "csv":
        rows = ["j,bernoulli"]
        rows += [f"{j},{format_rational(b)}" for j, b in enumerate(values)]
        out = "\n".join(rows)
    elif fmt == "json":
        out = _dumps(
            {
                "bernoulli": [
                    {"j": j, "value": format_rational(b)} for j, b in enumerate(values)
                ]
            }
        )
    elif fmt == "latex":
        out = " \\\\\n".join(
            f"B_{{{j}}} = {format_latex(Polynomial([b]))}" for j, b in enumerate(values)
        )
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return _ok(out)


# -- check -----------------------------------------------------------------------


def method_equivalence_check(
    r_max: int,
    table: Sequence[Polynomial],
    bernoulli_values: Optional[Sequence[Fraction]] = None,
) -> VerificationReport:
    report = VerificationReport("method_equivalence")
    for r in range(r_max + 1):
        direct = engine.power_sum_direct(r, bernoulli_values)
        got = table[r]
        report.record(
            direct == got, lambda: Witness(r, None, format_text(direct), format_text(got))
        )
    return report.finalize()


def constant_identity_check(
    r_max: int,
    table: Sequence[Polynomial],
    bernoulli_values: Optional[Sequence[Fraction]] = None,
) -> VerificationReport:
    report = VerificationReport("constant_identity")
    for r in range(1, r_max + 1):
        res = engine.linear_constant_identity(r, table, bernoulli_values)
        report.record(res.equal, lambda: Witness(r, None, res.rhs, res.lhs))
    return report.finalize()


def run_check(
    r_max: int = DEFAULT_R_MAX,
    n_max: int = DEFAULT_N_MAX,
    table: Optional[Sequence[Polynomial]] = None,
    bernoulli_values: Optional[Sequence[Fraction]] = None,
) -> List[VerificationReport]:
    """Run every suite against ``table`` (the engine's own when omitted)."""
    if table is None:
        table = engine.build_table(r_max)
    return [
        check_closed_form(r_max, n_max, table),
        finite_difference_check(r_max, n_max, table),
        integrality_check(r_max, n_max, table),
        method_equivalence_check(r_max, table, bernoulli_values),
        constant_identity_check(r_max, table, bernoulli_values),
    ]


def cmd_check(
    r_max: int = DEFAULT_R_MAX,
    n_max: int = DEFAULT_N_MAX,
    fmt: str = "text",
    table: Optional[Sequence[Polynomial]] = None,
    bernoulli_values: Optional[Sequence[Fraction]] = None,
) -> CommandResult:
    if n_max < 1:
        raise UsageError(f"--n-max must be >= 1, got {n_max}")
    reports = run_check(r_max, n_max, table, bernoulli_values)
    passed = all(rep.passed for rep in reports)
    payload = {"passed": passed, "suites": [rep.to_json() for rep in reports]}

    if passed and fmt == "text":
        lines = [
            f"{rep.name}: {rep.checks_run} checks, all passed" for rep in reports
        ]
        lines.append(f"all {len(reports)} suites passed (r_max={r_max}, n_max={n_max})")
        return _ok("\n".join(lines))
    if passed:
        return _ok(_dumps(payload))

    failed = [rep for rep in reports if not rep.passed]
    diag = "".join(
        f"verification failed: {rep.name} ({len(rep.failures)} of {rep.checks_run})\n"
        for rep in failed
    )
    return CommandResult(EXIT_VERIFY_FAILED, _dumps(payload) + "\n", diag)


# -- bench -----------------------------------------------------------------------


def _median_us(fn, reps: int):
    samples = []
    value = None
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        value = fn()
        samples.append((time.perf_counter_ns() - t0) / 1000)
    return value, statistics.median(samples)


def cmd_bench(
    r: int,
    N: int,
    reps: int,
    fmt: str = "text",
    table: Optional[Sequence[Polynomial]] = None,
) -> CommandResult:
    if N < 1:
        raise UsageError(f"N must be >= 1, got {N}")
    if reps < 1:
        raise UsageError(f"reps must be >= 1, got {reps}")
    p = (engine.build_table(r) if table is None else table)[r]
    closed, closed_us = _median_us(lambda: poly_eval(p, N), reps)
    brute, brute_us = _median_us(lambda: brute_force_sum(N, r), reps)
    match = closed == brute

    if fmt == "json":
        out = _dumps(
            {
                "r": r,
                "N": str(N),
                "reps": reps,
                "value": format_rational(closed),
                "brute_force_value": str(brute),
                "match": match,
                "closed_form_median_us": closed_us,
                "brute_force_median_us": brute_us,
            }
        )
    else:
        out = "\n".join(
            [
                f"value: {format_rational(closed)}",
                f"brute_force_value: {brute}",
                f"closed_form_median_us: {closed_us:.3f}",
                f"brute_force_median_us: {brute_us:.3f}",
            ]
        )
    if not match:
        return CommandResult(
            EXIT_VERIFY_FAILED,
            out + "\n",
            f"closed form and brute force disagree at r={r}, N={N}\n",
        )
    return _ok(out)


# -- argument parsing ------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _decimal(text: str) -> int:
    if not _DECIMAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def _non_negative(text: str) -> int:
    value = _decimal(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _positive(text: str) -> int:
    value = _decimal(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="powersum",
        description="Exact closed forms for sums of powers 1^r + ... + N^r.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formula", help="print S(N;r) as a polynomial in N")
    p.add_argument("r", type=_non_negative)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("table", help="print S(N;0) .. S(N;r_max)")
    p.add_argument("r_max", type=_non_negative)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("eval", help="exact value of S(N;r)")
    p.add_argument("r", type=_non_negative)
    p.add_argument("N", type=_positive)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bernoulli", help="Bernoulli numbers B_0 .. B_j_max (B_1 = -1/2)")
    p.add_argument("j_max", type=_non_negative)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("check", help="verify the engine against independent oracles")
    p.add_argument("--r-max", type=_non_negative, default=DEFAULT_R_MAX)
    p.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bench", help="time closed form against direct summation")
    p.add_argument("r", type=_non_negative)
    p.add_argument("N", type=_positive)
    p.add_argument("reps", type=_positive)
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse ``argv`` and run the command, never touching the real streams."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "formula":
            return cmd_formula(args.r, args.format)
        if args.command == "table":
            return cmd_table(args.r_max, args.format)
        if args.command == "eval":
            return cmd_eval(args.r, args.N, args.format)
        if args.command == "bernoulli":
            return cmd_bernoulli(args.j_max, args.format)
        if args.command == "check":
            return cmd_check(args.r_max, args.n_max, args.format)
        if args.command == "bench":
            return cmd_bench(args.r, args.N, args.reps, args.format)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        return CommandResult(EXIT_USAGE, "", f"{exc}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    # Decimal input and output carry no size cap.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        result = dispatch(argv)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    if result.stdout:
        sys.stdout.write(result.stdout)
        sys.stdout.flush()
    if result.stderr:
        sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
