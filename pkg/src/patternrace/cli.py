"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 invalid problem (e.g. NotReduced), 4 degenerate denominator or a
pattern that can never win, 5 every simulated trial was truncated.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import checks, oracle, solver
from .errors import AllTrialsTruncated, DegenerateDenominator, ValidationError, ZeroWinProbability
from .problemfile import ProblemFileError, decimal_str, load_problem, rat_pair, to_machine

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INVALID, EXIT_DEGENERATE, EXIT_TRUNCATED = 0, 1, 2, 3, 4, 5


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[c]) for r in [header, *rows]) for c in range(len(header))]
    fmt = lambda r: "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
    return "\n".join([fmt(header), fmt(["-" * w for w in widths]), *map(fmt, rows)])


def _both(x: Fraction, precision: int) -> str:
    if x.denominator == 1:
        return str(x)
    return f"{x} ≈ {decimal_str(x, precision)}"


def _patterns_doc(system) -> list[dict]:
    return [{"label": a.label, "symbols": list(a.symbols)} for a in system.patterns]


def cmd_analyze(args: argparse.Namespace) -> int:
    system = load_problem(args.file)
    r = solver.analyze(system)
    if args.format == "machine":
        b = r.bundle
        sys.stdout.write(to_machine({
            "command": "analyze",
            "patterns": _patterns_doc(system),
            "win_probs": [rat_pair(x) for x in r.win_probs],
            "expected_wait": rat_pair(r.expected_wait),
            "conditional_waits": [rat_pair(x) for x in r.conditional_waits],
            "generating_functions": {
                "denominator": [rat_pair(c) for c in b.denominator.coeffs],
                "pattern_numerators": [[rat_pair(c) for c in p.coeffs] for p in b.bj_dets],
                "tail_numerator": [rat_pair(c) for c in b.b_det.coeffs],
            },
        }))
        return EXIT_OK
    rows = [
        [a.label, str(len(a)), _both(p, args.precision), _both(c, args.precision)]
        for a, p, c in zip(system.patterns, r.win_probs, r.conditional_waits)
    ]
    print(_table(["pattern", "length", "Pr(wins first)", "E(tau | wins)"], rows))
    print()
    print(f"E(tau) = {_both(r.expected_wait, args.precision)}")
    print()
    print(f"common denominator D(s) = {r.bundle.denominator}")
    for a, p in zip(system.patterns, r.bundle.bj_dets):
        print(f"g[{a.label}](s) = ({p}) / D(s)")
    print(f"Q(s) = ({r.bundle.b_det}) / D(s)")
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    system = load_problem(args.file)
    b = solver.generating_functions(system)
    n = args.n
    ps = [g.series(n + 1) for g in b.pattern_gfs]
    q = b.tail_gf.series(n + 1)
    cum = [sum(p, Fraction(0)) for p in ps]
    if args.format == "machine":
        sys.stdout.write(to_machine({
            "command": "series",
            "patterns": _patterns_doc(system),
            "n": n,
            "p": [[rat_pair(p[k]) for p in ps] for k in range(n + 1)],
            "q": [rat_pair(x) for x in q],
            "cumulative_p": [rat_pair(x) for x in cum],
        }))
        return EXIT_OK
    rows = [[str(k), *(str(p[k]) for p in ps), str(q[k])] for k in range(n + 1)]
    rows.append(["sum", *(str(c) for c in cum), str(q[n])])
    print(_table(["k", *(f"p_k[{a.label}]" for a in system.patterns), "q_k"], rows))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    system = load_problem(args.file)
    results = checks.run_checks(system, args.n)
    failed = [r for r in results if r.status == checks.FAIL]
    if args.format == "machine":
        sys.stdout.write(to_machine({
            "command": "verify",
            "n": args.n,
            "checks": [{"name": r.name, "status": r.status, "detail": r.detail} for r in results],
            "first_failure": failed[0].name if failed else None,
        }))
    else:
        for r in results:
            print(f"{r.status}  {r.name}" + (f": {r.detail}" if r.detail else ""))
        if failed:
            print(f"\nFAIL: first violated identity is {failed[0].name}")
        else:
            print("\nall checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    system = load_problem(args.file)
    r = solver.analyze(system)
    res = oracle.simulate(system, oracle.SimConfig(args.trials, args.seed, args.max_steps))
    exact_rows = list(zip(
        [f"Pr({a.label} wins)" for a in system.patterns] + ["E(tau)"]
        + [f"E(tau | {a.label})" for a in system.patterns],
        [*r.win_probs, r.expected_wait, *r.conditional_waits],
        [*res.win_fractions, res.mean_wait, *res.conditional_means],
        [*res.win_std_errors, res.mean_wait_std_error, *res.conditional_std_errors],
    ))
    if args.format == "machine":
        sys.stdout.write(to_machine({
            "command": "simulate",
            "trials": res.trials,
            "seed": args.seed,
            "max_steps": res.max_steps,
            "truncated": res.truncated,
            "wins": list(res.wins),
            "rows": [
                {"quantity": name, "exact": rat_pair(x), "empirical": emp, "std_error": se}
                for name, x, emp, se in exact_rows
            ],
        }))
        return EXIT_OK
    p = args.precision
    rows = []
    for name, x, emp, se in exact_rows:
        z = (emp - float(x)) / se if se and se == se else float("nan")
        rows.append([name, decimal_str(x, p), f"{emp:.{p}g}", f"{se:.3g}", f"{z:+.2f}"])
    print(_table(["quantity", "exact", "empirical", "std err", "z"], rows))
    print()
    print(f"trials {res.trials}, seed {args.seed}, max steps {res.max_steps}, truncated {res.truncated}")
    if res.truncated:
        print("warning: truncated trials are excluded; conditional means are biased low")
    return EXIT_OK


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="patternrace", description="Exact odds and waiting times for pattern races.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="problem file")
        p.add_argument("--format", choices=("table", "machine"), default="table")
        p.add_argument("--precision", type=_positive_int, default=6, help="significant digits of decimals")
        p.set_defaults(func=fn)
        return p

    add("analyze", cmd_analyze, "win probabilities and waiting times")
    add("series", cmd_series, "first coefficients of the generating functions").add_argument(
        "--n", type=_positive_int, default=10)
    add("verify", cmd_verify, "run exact self-consistency checks").add_argument(
        "--n", type=_positive_int, default=30)
    p = add("simulate", cmd_simulate, "Monte Carlo comparison")
    p.add_argument("--trials", type=_positive_int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=_positive_int, default=None)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DegenerateDenominator, ZeroWinProbability) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except AllTrialsTruncated as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_TRUNCATED


if __name__ == "__main__":
    sys.exit(main())
