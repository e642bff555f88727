"""Ground truth independent of the determinant formulas.

* :func:`dp_distribution` pushes exact probability mass through a
  prefix-matching automaton, giving Pr(pattern i first seen at step n) and
  Pr(tau > n) as Fractions.
* :func:`simulate` plays the race many times with a counter-based random
  stream: trial t, step n always draws the same letter for a given seed,
  however the trials are batched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import AllTrialsTruncated
from .patterns import Distribution, PatternSystem

__all__ = [
    "MatchAutomaton",
    "DPTable",
    "SimConfig",
    "SimResult",
    "build_automaton",
    "dp_distribution",
    "absorption_stats",
    "letter_stream",
    "simulate",
]


@dataclass(frozen=True)
class MatchAutomaton:
    """States are distinct pattern prefixes; state 0 is the empty prefix.

    ``delta[state][letter_index]`` is the successor. ``accepting[state]`` is
    the index of the pattern completed on entering that state, or -1.
    """

    prefixes: tuple[tuple[str, ...], ...]
    delta: tuple[tuple[int, ...], ...]
    accepting: tuple[int, ...]

    @property
    def n_states(self) -> int:
        return len(self.prefixes)

    def run(self, letters: list[int]) -> tuple[int, int] | None:
        """Feed letter indices; return (step, pattern) of the first match."""
        state = 0
        for n, x in enumerate(letters, 1):
            state = self.delta[state][x]
            if self.accepting[state] >= 0:
                return n, self.accepting[state]
        return None


def build_automaton(sys: PatternSystem) -> MatchAutomaton:
    letters = sys.dist.alphabet.letters
    words = [a.symbols for a in sys.patterns]
    prefixes: list[tuple[str, ...]] = [()]
    for w in words:
        for k in range(1, len(w) + 1):
            if w[:k] not in prefixes:
                prefixes.append(w[:k])
    index = {p: i for i, p in enumerate(prefixes)}
    accepting = [-1] * len(prefixes)
    for i, w in enumerate(words):
        accepting[index[w]] = i

    delta = []
    for p in prefixes:
        row = []
        for x in letters:
            v = p + (x,)
            nxt = None
            # a completed pattern ends the race even if a longer prefix also matches
            for w in words:
                if v[len(v) - len(w):] == w and len(w) <= len(v):
                    nxt = index[w]
                    break
            if nxt is None:
                for k in range(len(v), -1, -1):
                    if v[len(v) - k:] in index:
                        nxt = index[v[len(v) - k:]]
                        break
            row.append(nxt)
        delta.append(tuple(row))
    return MatchAutomaton(tuple(prefixes), tuple(delta), tuple(accepting))


@dataclass(frozen=True)
class DPTable:
    """``p[n][i]`` = Pr(tau = n and pattern i wins); ``q[n]`` = Pr(tau > n); n = 0..n_max."""

    p: tuple[tuple[Fraction, ...], ...]
    q: tuple[Fraction, ...]

    @property
    def n_max(self) -> int:
        return len(self.q) - 1

    def column(self, i: int) -> list[Fraction]:
        return [row[i] for row in self.p]


def dp_distribution(sys: PatternSystem, n_max: int = 30) -> DPTable:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    auto = build_automaton(sys)
    probs = sys.dist.probs
    live = [s for s in range(auto.n_states) if auto.accepting[s] < 0]
    mass = {0: Fraction(1)}
    p_rows = [tuple(Fraction(0) for _ in range(sys.m))]
    q = [Fraction(1)]
    for _ in range(n_max):
        nxt: dict[int, Fraction] = {}
        won = [Fraction(0)] * sys.m
        for s, w in mass.items():
            for x, px in enumerate(probs):
                if not px:
                    continue
                t = auto.delta[s][x]
                if auto.accepting[t] >= 0:
                    won[auto.accepting[t]] += w * px
                else:
                    nxt[t] = nxt.get(t, Fraction(0)) + w * px
        mass = nxt
        p_rows.append(tuple(won))
        q.append(sum(mass.values(), Fraction(0)))
    assert all(s in live for s in mass)
    return DPTable(tuple(p_rows), tuple(q))


def _solve(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan solve of ``a x = b`` for several right-hand sides."""
    n = len(a)
    rows = [a[i][:] + b[i][:] for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if rows[i][k])
        rows[k], rows[piv] = rows[piv], rows[k]
        inv = 1 / rows[k][k]
        rows[k] = [x * inv for x in rows[k]]
        for i in range(n):
            if i != k and rows[i][k]:
                f = rows[i][k]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return [r[n:] for r in rows]


def absorption_stats(sys: PatternSystem) -> tuple[list[Fraction], Fraction, list[Fraction]]:
    """Exact (win probabilities, E tau, conditional waits) from the automaton as
    an absorbing Markov chain.

    For each live state u, h_i(u) = Pr(pattern i ends the race) and
    t_i(u) = E[tau * 1{i wins}] satisfy
    h_i(u) = sum_x p_x (1{x completes i} + h_i(v)) and
    t_i(u) = sum_x p_x (1{x completes i} + h_i(v) + t_i(v)),
    v ranging over live successors.
    """
    auto = build_automaton(sys)
    live = [u for u in range(auto.n_states) if auto.accepting[u] < 0]
    pos = {u: k for k, u in enumerate(live)}
    n, m = len(live), sys.m
    trans = [[Fraction(0)] * n for _ in range(n)]
    hit = [[Fraction(0)] * m for _ in range(n)]
    for u in live:
        for x, px in enumerate(sys.dist.probs):
            v = auto.delta[u][x]
            if auto.accepting[v] >= 0:
                hit[pos[u]][auto.accepting[v]] += px
            else:
                trans[pos[u]][pos[v]] += px
    a = [[int(r == c) - trans[r][c] for c in range(n)] for r in range(n)]
    h = _solve(a, hit)
    rhs = [[hit[r][i] + sum((trans[r][c] * h[c][i] for c in range(n)), Fraction(0)) for i in range(m)]
           for r in range(n)]
    t = _solve(a, rhs)
    wins = h[pos[0]]
    totals = t[pos[0]]
    e_tau = sum(totals, Fraction(0))
    return list(wins), e_tau, [tt / w if w else Fraction(0) for tt, w in zip(totals, wins)]


# --- Monte Carlo -----------------------------------------------------------

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _mix(z: np.ndarray) -> np.ndarray:
    # SplitMix64 output function; uint64 arithmetic wraps.
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def _trial_keys(seed: int, trials: np.ndarray) -> np.ndarray:
    base = _mix(np.array([seed & _MASK], dtype=np.uint64))[0]
    return _mix(base ^ _mix(trials.astype(np.uint64) * np.uint64(_GOLDEN)))


def _uniform64(keys: np.ndarray, step: int) -> np.ndarray:
    # SplitMix64 stream seeded by the trial key: state_n = key + (n + 1) * golden.
    return _mix(keys + np.uint64(((step + 1) * _GOLDEN) & _MASK))


def _thresholds(dist: Distribution) -> np.ndarray:
    cum, out = Fraction(0), []
    for p in dist.probs[:-1]:
        cum += p
        out.append(min(math.floor(cum * (1 << 64)), _MASK))
    return np.array(out, dtype=np.uint64)


def letter_stream(dist: Distribution, seed: int, trial: int, n: int) -> list[str]:
    """The first ``n`` letters drawn for ``trial`` under ``seed``."""
    keys = _trial_keys(seed, np.array([trial]))
    th = _thresholds(dist)
    letters = dist.alphabet.letters
    return [letters[int(np.searchsorted(th, _uniform64(keys, k), side="right")[0])] for k in range(n)]


@dataclass(frozen=True)
class SimConfig:
    trials: int
    seed: int = 0
    max_steps: int | None = None
    batch: int = 1 << 17

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")


@dataclass(frozen=True)
class SimResult:
    trials: int
    truncated: int
    wins: tuple[int, ...]
    wait_sums: tuple[int, ...]
    wait_sq_sums: tuple[int, ...]
    max_steps: int

    @property
    def completed(self) -> int:
        return self.trials - self.truncated

    @property
    def win_fractions(self) -> list[float]:
        return [w / self.completed for w in self.wins]

    @property
    def win_std_errors(self) -> list[float]:
        n = self.completed
        return [math.sqrt(f * (1 - f) / n) for f in self.win_fractions]

    @property
    def mean_wait(self) -> float:
        return sum(self.wait_sums) / self.completed

    @property
    def mean_wait_std_error(self) -> float:
        return _std_error(self.completed, sum(self.wait_sums), sum(self.wait_sq_sums))

    @property
    def conditional_means(self) -> list[float]:
        return [s / w if w else math.nan for s, w in zip(self.wait_sums, self.wins)]

    @property
    def conditional_std_errors(self) -> list[float]:
        return [_std_error(w, s, sq) for w, s, sq in zip(self.wins, self.wait_sums, self.wait_sq_sums)]


def _std_error(n: int, s: int, sq: int) -> float:
    if n < 2:
        return math.nan
    var = Fraction(sq * n - s * s, n * (n - 1))
    return math.sqrt(var / n)


def default_max_steps(sys: PatternSystem) -> int:
    from .solver import expected_wait

    try:
        e = expected_wait(sys)
    except ArithmeticError:
        return 10**6
    return max(math.ceil(100 * e), max(sys.lengths))


def simulate(sys: PatternSystem, cfg: SimConfig) -> SimResult:
    """Empirical race results; identical for identical (system, cfg)."""
    max_steps = cfg.max_steps if cfg.max_steps is not None else default_max_steps(sys)
    if max_steps < max(sys.lengths):
        raise ValueError("max_steps must be at least the longest pattern length")
    auto = build_automaton(sys)
    delta = np.array(auto.delta, dtype=np.int64)
    accept = np.array(auto.accepting, dtype=np.int64)
    th = _thresholds(sys.dist)

    m = sys.m
    wins = np.zeros(m, dtype=np.int64)
    sums = [0] * m
    sqs = [0] * m
    truncated = 0
    for start in range(0, cfg.trials, cfg.batch):
        idx = np.arange(start, min(start + cfg.batch, cfg.trials), dtype=np.int64)
        keys = _trial_keys(cfg.seed, idx)
        state = np.zeros(len(idx), dtype=np.int64)
        for step in range(max_steps):
            if not len(keys):
                break
            x = np.searchsorted(th, _uniform64(keys, step), side="right")
            state = delta[state, x]
            hit = accept[state]
            done = hit >= 0
            if done.any():
                winners = hit[done]
                counts = np.bincount(winners, minlength=m)
                wins += counts
                n = step + 1
                for i in range(m):
                    c = int(counts[i])
                    sums[i] += c * n
                    sqs[i] += c * n * n
                keep = ~done
                keys, state = keys[keep], state[keep]
        truncated += len(keys)
    if truncated == cfg.trials:
        raise AllTrialsTruncated(f"all {cfg.trials} trials exceeded {max_steps} steps")
    return SimResult(cfg.trials, truncated, tuple(int(w) for w in wins), tuple(sums), tuple(sqs), max_steps)
