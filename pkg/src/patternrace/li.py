"""Star-number (Conway/Li leading-number) reformulation of the race.

``A_j * A_i`` is the sum of 1/Pr(first k letters of A_i) over every k where
that prefix of A_i equals the last k letters of A_j. With the matrix
``C[i][j] = A_j * A_i`` and ``C_j`` the same matrix with column j replaced
by ones, the win probabilities are ``det C_i / sum_j det C_j`` and the mean
waiting time is ``det C / sum_j det C_j``.

This path deliberately avoids the polynomial machinery in
:mod:`patternrace.solver` so the two can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateDenominator
from .patterns import Distribution, Pattern, PatternSystem

__all__ = [
    "StarMatrix",
    "star_number",
    "star_matrix",
    "star_analysis",
    "verify_li_identity",
    "identity_b_shortcut",
    "b_is_identity",
]


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    out = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            out = -out
        out *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return out


def star_number(dist: Distribution, a_j: Pattern, a_i: Pattern) -> Fraction:
    total = Fraction(0)
    for k in range(1, min(len(a_i), len(a_j)) + 1):
        if a_i.prefix(k) == a_j.suffix(k):
            total += 1 / dist.word_prob(a_i.prefix(k))
    return total


@dataclass(frozen=True)
class StarMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    c_det: Fraction
    cj_dets: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return len(self.entries)


def star_matrix(sys: PatternSystem) -> StarMatrix:
    pats, d = sys.patterns, sys.dist
    c = [[star_number(d, aj, ai) for aj in pats] for ai in pats]
    cj = []
    for j in range(sys.m):
        cj.append(_det([r[:j] + [Fraction(1)] + r[j + 1:] for r in c]))
    return StarMatrix(tuple(map(tuple, c)), _det(c), tuple(cj))


def star_analysis(sys: PatternSystem) -> tuple[list[Fraction], Fraction]:
    sm = star_matrix(sys)
    total = sum(sm.cj_dets, Fraction(0))
    if not total:
        raise DegenerateDenominator("sum of star-matrix column determinants is 0")
    return [x / total for x in sm.cj_dets], sm.c_det / total


def verify_li_identity(sys: PatternSystem) -> list[Fraction]:
    """Residuals ``det C - sum_j (A_j * A_i) det C_j``, one per row i; all should be 0."""
    sm = star_matrix(sys)
    return [
        sm.c_det - sum((row[j] * sm.cj_dets[j] for j in range(sm.m)), Fraction(0))
        for row in sm.entries
    ]


def b_is_identity(sys: PatternSystem) -> bool:
    """True when no pattern overlaps itself or another except trivially.

    Checked on the words directly: a proper prefix of A_i equal to a suffix
    of A_j (or a full match off the diagonal) makes B non-identity.
    """
    for i, ai in enumerate(sys.patterns):
        for j, aj in enumerate(sys.patterns):
            top = min(len(ai), len(aj))
            for k in range(1, top + 1):
                trivial = i == j and k == len(ai)
                if not trivial and ai.prefix(k) == aj.suffix(k):
                    return False
    return True


def identity_b_shortcut(sys: PatternSystem) -> list[Fraction] | None:
    """Conditional waits when the correlation matrix is the identity, else ``None``.

    In that case E(tau | i wins) = E(tau) + l_i - sum_k l_k Pr(A_k) / sum_k Pr(A_k),
    and E(tau) = 1 / sum_k Pr(A_k).
    """
    if not b_is_identity(sys):
        return None
    probs = [sys.dist.word_prob(a.symbols) for a in sys.patterns]
    total = sum(probs, Fraction(0))
    mean_len = sum((len(a) * p for a, p in zip(sys.patterns, probs)), Fraction(0)) / total
    e_tau = 1 / total
    return [e_tau + len(a) - mean_len for a in sys.patterns]
