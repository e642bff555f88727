"""
Waiting-time distributions from generating functions
====================================================

The closed-form generating functions can be expanded term by term into the
exact distribution of the stopping time. An automaton that tracks the
longest matched prefix computes the same numbers by brute dynamic
programming.
"""

from patternrace import coin, dp_distribution, generating_functions, make_system

race = make_system(coin(), ["THH", "HTH", "HHT"])
bundle = generating_functions(race)

n = 12
series = [g.series(n + 1) for g in bundle.pattern_gfs]
tails = bundle.tail_gf.series(n + 1)
table = dp_distribution(race, n)

###############################################################################
# Pr(tau = k and pattern i wins), next to Pr(tau > k).
print("k   " + "  ".join(f"{a.label:>8}" for a in race.patterns) + "   Pr(tau > k)")
for k in range(n + 1):
    row = "  ".join(f"{str(s[k]):>8}" for s in series)
    print(f"{k:<3} {row}   {tails[k]}")

###############################################################################
# The two computations agree exactly.
assert all(series[i] == table.column(i) for i in range(race.m))
assert tails == list(table.q)
print("series and automaton agree up to n =", n)
