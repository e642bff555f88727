"""Exact self-consistency checks run by ``patternrace verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import li, oracle, solver
from .exactmath import ONE, S, Poly
from .patterns import PatternSystem, correlation_poly, pattern_prob

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""


def _residual_identities(sys: PatternSystem, n: int) -> str | None:
    b = solver.generating_functions(sys)
    first = (ONE - S) * b.b_det + b.bj_sum - b.denominator
    if first:
        return f"first equation leaves {first}"
    for i, ai in enumerate(sys.patterns):
        lhs = Poly.monomial(pattern_prob(sys.dist, ai), len(ai)) * b.b_det
        rhs = sum((correlation_poly(sys.dist, ai, aj) * b.bj_dets[j] for j, aj in enumerate(sys.patterns)), Poly())
        if lhs != rhs:
            return f"equation for {ai.label} leaves {lhs - rhs}"
    return None


def _pgf_sum(sys: PatternSystem, n: int) -> str | None:
    b = solver.generating_functions(sys)
    total = sum((g(1) for g in b.pattern_gfs), Fraction(0))
    return None if total == 1 else f"sum of g_i(1) is {total}"


def _li_identity(sys: PatternSystem, n: int) -> str | None:
    res = li.verify_li_identity(sys)
    return None if not any(res) else f"residuals {[str(r) for r in res]}"


def _route_agreement(sys: PatternSystem, n: int) -> str | None:
    w, e = li.star_analysis(sys)
    w2, e2 = solver.win_probabilities(sys), solver.expected_wait(sys)
    if w != w2 or e != e2:
        return f"star route {w}, {e} vs determinant route {w2}, {e2}"
    return None


def _total_expectation(sys: PatternSystem, n: int) -> str | None:
    r = solver.analyze(sys)
    total = sum((p * c for p, c in zip(r.win_probs, r.conditional_waits)), Fraction(0))
    return None if total == r.expected_wait else f"sum Pr_i E_i = {total} != E tau = {r.expected_wait}"


def _dp_vs_series(sys: PatternSystem, n: int) -> str | None:
    b = solver.generating_functions(sys)
    t = oracle.dp_distribution(sys, n)
    for i, g in enumerate(b.pattern_gfs):
        got = g.series(n + 1)
        want = t.column(i)
        if got != want:
            k = next(k for k in range(n + 1) if got[k] != want[k])
            return f"{sys.patterns[i].label}: coefficient {k} is {got[k]}, automaton gives {want[k]}"
    got = b.tail_gf.series(n + 1)
    if got != list(t.q):
        k = next(k for k in range(n + 1) if got[k] != t.q[k])
        return f"tail coefficient {k} is {got[k]}, automaton gives {t.q[k]}"
    return None


def _tail_recurrence(sys: PatternSystem, n: int) -> str | None:
    b = solver.generating_functions(sys)
    q = b.tail_gf.series(n + 1)
    ps = [g.series(n + 1) for g in b.pattern_gfs]
    for k in range(n):
        if q[k] - q[k + 1] != sum(p[k + 1] for p in ps):
            return f"q_{k} - q_{k + 1} != sum p_{k + 1}"
    return None


def _overlap_recurrence(sys: PatternSystem, n: int) -> str | None:
    t = oracle.dp_distribution(sys, n)
    d, pats = sys.dist, sys.patterns
    for step in range(n - max(sys.lengths) + 1):
        for i, ai in enumerate(pats):
            rhs = Fraction(0)
            for j, aj in enumerate(pats):
                for k in range(1, min(len(ai), len(aj)) + 1):
                    if ai.prefix(k) == aj.suffix(k):
                        rhs += d.word_prob(ai.suffix(len(ai) - k)) * t.p[step + k][j]
            if t.q[step] * pattern_prob(d, ai) != rhs:
                return f"fails at n = {step} for {ai.label}"
    return None


def _solovev(sys: PatternSystem, n: int) -> str | None:
    for a in sys.patterns:
        one = solver.singleton(sys.dist, a)
        if solver.solovev_wait(sys.dist, a) != solver.expected_wait(one):
            return f"single-pattern mean for {a.label} disagrees"
    return None


CHECKS: list[tuple[str, Callable[[PatternSystem, int], str | None]]] = [
    ("system-residual", _residual_identities),
    ("pgf-sum-at-one", _pgf_sum),
    ("li-identity", _li_identity),
    ("route-agreement", _route_agreement),
    ("total-expectation", _total_expectation),
    ("automaton-vs-series", _dp_vs_series),
    ("tail-recurrence", _tail_recurrence),
    ("overlap-recurrence", _overlap_recurrence),
    ("single-pattern-mean", _solovev),
]


def _shortcut(sys: PatternSystem) -> CheckResult:
    name = "identity-b-shortcut"
    got = li.identity_b_shortcut(sys)
    if got is None:
        return CheckResult(name, SKIP, "correlation matrix is not the identity")
    want = solver.conditional_waits(sys)
    if got != want:
        return CheckResult(name, FAIL, f"shortcut {[str(x) for x in got]} vs {[str(x) for x in want]}")
    return CheckResult(name, PASS)


def run_checks(sys: PatternSystem, n: int = 30) -> list[CheckResult]:
    out = []
    for name, fn in CHECKS:
        try:
            msg = fn(sys, n)
        except Exception as exc:  # a crash is a failed check, not a crashed report
            msg = f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, PASS if msg is None else FAIL, msg or ""))
    try:
        out.append(_shortcut(sys))
    except Exception as exc:
        out.append(CheckResult("identity-b-shortcut", FAIL, f"{type(exc).__name__}: {exc}"))
    return out
