"""
Checking the formulas by simulation
===================================

Play the three-player game a million times. The random stream is keyed by
(seed, trial index, step), so rerunning with the same seed reproduces every
game exactly.
"""

from patternrace import SimConfig, analyze, coin, make_system, simulate

race = make_system(coin(), ["THH", "HTH", "HHT"])
exact = analyze(race)
res = simulate(race, SimConfig(trials=1_000_000, seed=7))

###############################################################################
# Empirical values with their standard errors.
for a, p, f, se in zip(race.patterns, exact.win_probs, res.win_fractions, res.win_std_errors):
    print(f"Pr({a.label} wins): exact {float(p):.5f}, simulated {f:.5f} +/- {se:.5f}")
print(f"E(tau): exact {float(exact.expected_wait):.5f}, simulated {res.mean_wait:.5f} +/- {res.mean_wait_std_error:.5f}")
for a, c, mu, se in zip(race.patterns, exact.conditional_waits, res.conditional_means, res.conditional_std_errors):
    print(f"E(tau | {a.label}): exact {float(c):.5f}, simulated {mu:.5f} +/- {se:.5f}")

###############################################################################
# Same seed, same games.
assert simulate(race, SimConfig(trials=1_000_000, seed=7)) == res
