"""
Racing DNA motifs
=================

ACG, ATG and AG in a random sequence of bases. None of them overlaps itself
or another, so the overlap matrix is the identity and a shortcut formula
gives the conditional waiting times directly.
"""

from fractions import Fraction

from patternrace import Distribution, analyze, make_system, uniform
from patternrace.li import identity_b_shortcut

motifs = ["ACG", "ATG", "AG"]

###############################################################################
# Uniform base frequencies.
race = make_system(uniform("ACGT"), motifs)
r = analyze(race)
print("win probabilities:", [str(x) for x in r.win_probs])
print("E(tau):", r.expected_wait)
print("E(tau | winner):", [str(x) for x in r.conditional_waits])
print("shortcut agrees:", identity_b_shortcut(race) == list(r.conditional_waits))

###############################################################################
# A GC-rich genome. The two length-3 motifs still have equal conditional
# waiting times, whatever the composition.
gc_rich = Distribution.from_mapping(
    {"A": Fraction(1, 5), "C": Fraction(3, 10), "G": Fraction(3, 10), "T": Fraction(1, 5)}
)
r = analyze(make_system(gc_rich, motifs))
for m, p, c in zip(motifs, r.win_probs, r.conditional_waits):
    print(f"{m}: Pr(first) = {p} ~ {float(p):.4f}, E(tau | {m} first) = {c} ~ {float(c):.4f}")
