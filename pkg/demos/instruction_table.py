"""The eight instruction classes and why their mixtures never break the bound.

An instruction triple (A0, B1, B2) fixes both detectors' answers for every
settings pair before the run starts, with A1 = 1 - B1 enforcing perfect
anti-correlation at equal settings.  With only eight classes, the whole
model is an 8 x 4 lookup table, and the margin reduces to counting how
often classes 1 and 6 were dealt.
"""

from bellworlds import ClassWeights, bell_check, expected_counters, format_outcome_table

# the (a, b) = (1, 1) column is all-unequal: A1 = 1 - B1 anchors perfect
# anti-correlation at equal settings for every class
print(format_outcome_table())
print()

# only classes 1 and 6 separate lhs from rhs, so the margin is just a
# count of how often those two cards were dealt
for name, weights in (
    ("uniform", ClassWeights.uniform(160.0)),
    ("saturating", ClassWeights.bell_saturating(160.0)),
    ("all class 1", ClassWeights(tuple(160.0 if i == 1 else 0.0 for i in range(8)))),
):
    report = bell_check(expected_counters(weights))
    n1, n6 = weights.n[1], weights.n[6]
    print(f"{name:12s} N1 = {n1:5.1f}, N6 = {n6:5.1f}: "
          f"margin = {report.margin:+7.2f} = -(N1 + N6)/2 = {-(n1 + n6) / 2:+7.2f}")

print()
print("The best an instruction deal can do is margin 0, reached exactly when")
print("no card from class 1 or 6 is ever dealt; a positive margin is out of")
print("reach no matter how the eight weights are tuned.")
