"""
Conway's leading numbers
========================

Dividing each overlap polynomial at s = 1 by the probability of its pattern
gives Conway-style leading numbers A_j * A_i. Win probabilities and the
mean waiting time follow from determinants of that plain rational matrix,
and a determinant identity ties it back to Li's martingale result.
"""

from patternrace import analyze, coin, make_system
from patternrace.li import star_analysis, star_matrix, verify_li_identity

race = make_system(coin(), ["THH", "HTH", "HHT"])
sm = star_matrix(race)

print("C[i][j] = A_j * A_i:")
for a, row in zip(race.patterns, sm.entries):
    print(f"  {a.label}: " + "  ".join(f"{str(x):>4}" for x in row))
print("det C =", sm.c_det, "  det C_j =", [str(x) for x in sm.cj_dets])

wins, e_tau = star_analysis(race)
r = analyze(race)
print("star route:", [str(w) for w in wins], e_tau)
print("determinant route:", [str(w) for w in r.win_probs], r.expected_wait)
print("Li identity residuals:", [str(x) for x in verify_li_identity(race)])
