"""Closed-form race statistics from determinants of correlation matrices.

For a system of m patterns let ``B(s)`` be the m x m matrix whose (i, j)
entry is the correlation polynomial of pattern i against pattern j, and let
``B_j(s)`` be ``B(s)`` with column j replaced by ``[Pr(A_i) s**l_i]``. With
``D(s) = sum_j det B_j(s) + (1 - s) det B(s)``:

* the generating function of Pr(pattern i wins at step n) is ``det B_i / D``;
* the generating function of the tails Pr(tau > n) is ``det B / D``.

Everything at s = 1 is obtained by direct polynomial evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominator, ZeroWinProbability
from .exactmath import ONE, S, Poly, PolyMatrix, RatFn
from .patterns import Distribution, Pattern, PatternSystem, correlation_poly, pattern_prob, validate_system

__all__ = [
    "GeneratingBundle",
    "AnalysisReport",
    "build_matrices",
    "generating_functions",
    "win_probabilities",
    "expected_wait",
    "solovev_wait",
    "conditional_waits",
    "analyze",
]


@dataclass(frozen=True)
class GeneratingBundle:
    pattern_gfs: tuple[RatFn, ...]
    tail_gf: RatFn
    b_det: Poly
    bj_dets: tuple[Poly, ...]

    @property
    def denominator(self) -> Poly:
        return self.tail_gf.denom

    @property
    def bj_sum(self) -> Poly:
        return sum(self.bj_dets, Poly())


@dataclass(frozen=True)
class AnalysisReport:
    win_probs: tuple[Fraction, ...]
    expected_wait: Fraction
    conditional_waits: tuple[Fraction, ...]
    bundle: GeneratingBundle


def build_matrices(sys: PatternSystem) -> tuple[PolyMatrix, list[PolyMatrix]]:
    d, pats = sys.dist, sys.patterns
    b = PolyMatrix([[correlation_poly(d, ai, aj) for aj in pats] for ai in pats])
    col = [Poly.monomial(pattern_prob(d, ai), len(ai)) for ai in pats]
    return b, [b.replace_column(j, col) for j in range(sys.m)]


def generating_functions(sys: PatternSystem) -> GeneratingBundle:
    b, bjs = build_matrices(sys)
    b_det = b.det()
    bj_dets = tuple(x.det() for x in bjs)
    denom = sum(bj_dets, Poly()) + (ONE - S) * b_det
    return GeneratingBundle(
        pattern_gfs=tuple(RatFn(n, denom) for n in bj_dets),
        tail_gf=RatFn(b_det, denom),
        b_det=b_det,
        bj_dets=bj_dets,
    )


def _bj_sum_at_one(bundle: GeneratingBundle) -> Fraction:
    total = bundle.bj_sum(1)
    if not total:
        raise DegenerateDenominator("sum of replaced-column determinants is 0 at s = 1")
    return total


def win_probabilities(sys: PatternSystem, bundle: GeneratingBundle | None = None) -> list[Fraction]:
    bundle = bundle or generating_functions(sys)
    total = _bj_sum_at_one(bundle)
    return [p(1) / total for p in bundle.bj_dets]


def expected_wait(sys: PatternSystem, bundle: GeneratingBundle | None = None) -> Fraction:
    bundle = bundle or generating_functions(sys)
    return bundle.b_det(1) / _bj_sum_at_one(bundle)


def solovev_wait(dist: Distribution, a: Pattern) -> Fraction:
    """Mean waiting time for a single pattern: sum of 1/Pr(prefix) over self-overlaps."""
    return sum(
        (1 / dist.word_prob(a.prefix(k)) for k in range(1, len(a) + 1) if a.prefix(k) == a.suffix(k)),
        Fraction(0),
    )


def conditional_waits(sys: PatternSystem, bundle: GeneratingBundle | None = None) -> list[Fraction]:
    """E(tau | pattern i wins) for each i.

    Adds to E(tau) the derivative at 1 of det B_i / sum_j det B_j (quotient
    rule), divided by the win probability of pattern i.
    """
    bundle = bundle or generating_functions(sys)
    d = bundle.bj_sum
    d1 = _bj_sum_at_one(bundle)
    dp1 = d.derivative()(1)
    e_tau = bundle.b_det(1) / d1
    out = []
    for i, n in enumerate(bundle.bj_dets):
        n1 = n(1)
        if not n1:
            raise ZeroWinProbability(i)
        ratio_prime = (n.derivative()(1) * d1 - n1 * dp1) / (d1 * d1)
        out.append(e_tau + ratio_prime / (n1 / d1))
    return out


def analyze(sys: PatternSystem) -> AnalysisReport:
    bundle = generating_functions(sys)
    return AnalysisReport(
        win_probs=tuple(win_probabilities(sys, bundle)),
        expected_wait=expected_wait(sys, bundle),
        conditional_waits=tuple(conditional_waits(sys, bundle)),
        bundle=bundle,
    )


def singleton(dist: Distribution, a: Pattern) -> PatternSystem:
    return validate_system(dist, [a])
