"""
Penney's game with three players
================================

Three players bet on THH, HTH and HHT and a coin is tossed until one of the
words shows up. Who is favoured, and how long does the game last?
"""

from fractions import Fraction

from patternrace import analyze, coin, make_system

###############################################################################
# A fair coin. Every number is an exact fraction.
race = make_system(coin(), ["THH", "HTH", "HHT"])
report = analyze(race)

for pattern, p, c in zip(race.patterns, report.win_probs, report.conditional_waits):
    print(f"{pattern.label}: wins with probability {p}, game lasts {c} tosses on average when it does")
print("expected game length:", report.expected_wait)

###############################################################################
# The overlap matrix and the generating functions behind those numbers. All
# three share the denominator D(s).
bundle = report.bundle
print("D(s) =", bundle.denominator)
for pattern, numer in zip(race.patterns, bundle.bj_dets):
    print(f"  numerator for {pattern.label}: {numer}")

###############################################################################
# Biasing the coin changes who is favoured. THH gets better the more tails
# show up; HHT needs heads.
for p in [Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(4, 5)]:
    r = analyze(make_system(coin(p), ["THH", "HTH", "HHT"]))
    odds = ", ".join(f"{float(x):.3f}" for x in r.win_probs)
    print(f"Pr(H) = {p}: win probabilities [{odds}], E(tau) = {float(r.expected_wait):.3f}")

###############################################################################
# The classic two-player game is non-transitive: for any first choice there is
# a reply that beats it.
beats = {"HHH": "THH", "HHT": "THH", "HTH": "HHT", "HTT": "HHT",
         "THH": "TTH", "THT": "TTH", "TTH": "HTT", "TTT": "HTT"}
for first, reply in beats.items():
    r = analyze(make_system(coin(), [first, reply]))
    print(f"{reply} beats {first} with probability {r.win_probs[1]}")
