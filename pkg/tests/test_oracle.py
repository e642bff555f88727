import math
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings

from conftest import brute_force_first_hits, systems
from patternrace.errors import AllTrialsTruncated
from patternrace.oracle import SimConfig, absorption_stats, build_automaton, dp_distribution, letter_stream, simulate
from patternrace.patterns import coin, make_system, uniform
from patternrace.solver import analyze, generating_functions

prop_settings = settings(
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow], max_examples=40, deadline=None
)
eighth = Fraction(1, 8)


def test_dp_examples(fair_penney):
    t = dp_distribution(make_system(coin(), ["HH"]), 2)
    assert t.q[2] == Fraction(3, 4)
    t = dp_distribution(fair_penney, 3)
    assert t.p[3] == (eighth, eighth, eighth)
    for n in range(3):
        assert t.p[n] == (0, 0, 0) and t.q[n] == 1


def test_dp_matches_brute_force(fair_penney, dna_uniform):
    for sys, n in [(fair_penney, 10), (dna_uniform, 6), (make_system(coin(Fraction(1, 3)), ["HTHH", "TT"]), 10)]:
        p, q = brute_force_first_hits(sys, n)
        t = dp_distribution(sys, n)
        assert [list(r) for r in t.p] == p
        assert list(t.q) == q


@prop_settings
@given(systems(max_m=3, max_len=4))
def test_dp_matches_brute_force_random(sys):
    n = 6 if len(sys.dist.alphabet) <= 3 else 5
    p, q = brute_force_first_hits(sys, n)
    t = dp_distribution(sys, n)
    assert [list(r) for r in t.p] == p
    assert list(t.q) == q


@prop_settings
@given(systems())
def test_dp_matches_series(sys):
    n = 20
    b = generating_functions(sys)
    t = dp_distribution(sys, n)
    for i, g in enumerate(b.pattern_gfs):
        assert g.series(n + 1) == t.column(i)
    assert b.tail_gf.series(n + 1) == list(t.q)


@prop_settings
@given(systems())
def test_absorbing_chain_matches_closed_forms(sys):
    r = analyze(sys)
    wins, e_tau, cond = absorption_stats(sys)
    assert wins == list(r.win_probs)
    assert e_tau == r.expected_wait
    assert cond == list(r.conditional_waits)


@prop_settings
@given(systems())
def test_overlap_recurrence_on_dp(sys):
    n = 18
    t = dp_distribution(sys, n)
    d = sys.dist
    for step in range(n - max(sys.lengths) + 1):
        for ai in sys.patterns:
            rhs = Fraction(0)
            for j, aj in enumerate(sys.patterns):
                for k in range(1, min(len(ai), len(aj)) + 1):
                    if ai.prefix(k) == aj.suffix(k):
                        rhs += d.word_prob(ai.suffix(len(ai) - k)) * t.p[step + k][j]
            assert t.q[step] * d.word_prob(ai.symbols) == rhs


@prop_settings
@given(systems())
def test_automaton_shape(sys):
    auto = build_automaton(sys)
    assert auto.n_states <= 1 + sum(sys.lengths)
    k = len(sys.dist.alphabet)
    assert all(len(row) == k and all(0 <= t < auto.n_states for t in row) for row in auto.delta)
    assert sorted(i for i in auto.accepting if i >= 0) == list(range(sys.m))


def test_automaton_run(fair_penney):
    auto = build_automaton(fair_penney)
    H, T = 0, 1
    assert auto.run([H, T, H, H]) == (3, 1)
    assert auto.run([T, T, H, H]) == (4, 0)
    assert auto.run([T, T]) is None


def test_dp_rejects_bad_n():
    with pytest.raises(ValueError):
        dp_distribution(make_system(coin(), ["H"]), 0)


# --- Monte Carlo -------------------------------------------------------------------

def test_single_trial_replays_stream():
    sys = make_system(coin(), ["H"])
    for seed in (0, 1, 99, 2**63 + 5):
        res = simulate(sys, SimConfig(1, seed))
        stream = letter_stream(sys.dist, seed, 0, res.max_steps)
        assert sum(res.wait_sums) == stream.index("H") + 1


def test_stream_independent_of_batching(fair_penney):
    a = simulate(fair_penney, SimConfig(5000, seed=3, batch=1 << 17))
    b = simulate(fair_penney, SimConfig(5000, seed=3, batch=37))
    assert a == b
    c = simulate(fair_penney, SimConfig(5000, seed=4))
    assert c != a


def test_letter_stream_frequencies():
    d = uniform("ACGT")
    xs = [x for t in range(200) for x in letter_stream(d, 5, t, 50)]
    for letter in "ACGT":
        f = xs.count(letter) / len(xs)
        assert abs(f - 0.25) < 4 * math.sqrt(0.25 * 0.75 / len(xs))


def test_simulation_close_to_exact_small(fair_penney):
    r = analyze(fair_penney)
    res = simulate(fair_penney, SimConfig(100_000, seed=11))
    assert res.truncated == 0
    for f, se, p in zip(res.win_fractions, res.win_std_errors, r.win_probs):
        assert abs(f - float(p)) < 4 * se
    assert abs(res.mean_wait - float(r.expected_wait)) < 4 * res.mean_wait_std_error
    for m_, se, c in zip(res.conditional_means, res.conditional_std_errors, r.conditional_waits):
        assert abs(m_ - float(c)) < 4 * se


def test_dna_mean_wait(dna_uniform):
    res = simulate(dna_uniform, SimConfig(200_000, seed=8))
    assert abs(res.mean_wait - 32 / 3) < 4 * res.mean_wait_std_error


def test_truncation_is_reported():
    sys = make_system(coin(), ["HHHHHH"])
    res = simulate(sys, SimConfig(2000, seed=2, max_steps=10))
    assert 0 < res.truncated < 2000
    assert res.completed + res.truncated == 2000
    with pytest.raises(AllTrialsTruncated):
        simulate(make_system(coin(Fraction(1, 1000)), ["HHHHHH"]), SimConfig(50, seed=2, max_steps=6))


def test_sim_config_validation(fair_penney):
    with pytest.raises(ValueError):
        SimConfig(0)
    with pytest.raises(ValueError):
        simulate(fair_penney, SimConfig(10, max_steps=2))
