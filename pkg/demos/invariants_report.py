# The exact signature identity and the counting invariants.
#
# For any circle action with isolated fixed points, the rational function
#   sum_p sign(p) * prod_i (1 + t^{w_p^i}) / (1 - t^{w_p^i})
# is a constant: the signature of the manifold.  Clearing denominators
# makes that an integer polynomial identity N(t) = s * D(t), checked here
# with exact coefficients.

from fractions import Fraction

import circleact as ca

# Three fixed points: the blow-up of a pole of the (1,1) sphere rotation.
data = ca.FixedPointData.of((-1, 1, 1), (1, 1, 2), (1, 1, 2))
check = ca.signature_series_check(data)
print("data:", data)
print("signature:", ca.signature(data), " series constant:", check.constant)

# Sanity: evaluate the rational sum at a few points and watch it not move.
for t in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 7)):
    value = sum(
        Fraction(p.sign)
        * Fraction((1 + t ** p.weights[0]) * (1 + t ** p.weights[1]))
        / ((1 - t ** p.weights[0]) * (1 - t ** p.weights[1]))
        for p in data.points
    )
    print(f"  rational sum at t={t}: {value}")

# Data that no action can have: two fixed points must carry equal weights.
bad = ca.FixedPointData.of((1, 1, 2), (-1, 1, 3))
print("\nbad pair:", bad)
print("series check:", ca.signature_series_check(bad))

# The five fixed points of the standard weighted rotation of the complex
# projective 4-space (an arity-4, dimension-8 example).
cp4 = ca.FixedPointData.of(
    (1, 1, 2, 3, 4),
    (-1, 1, 1, 2, 3),
    (1, 1, 1, 2, 2),
    (-1, 1, 1, 2, 3),
    (1, 1, 2, 3, 4),
)
report = ca.structural_checks(cp4)
print("\nprojective 4-space report:")
print("  signature:", report.signature)
print("  series constant:", report.series_constant)
print("  smallest-weight balance:", report.smallest_weight_balance)
print("  weight multiplicities:", report.parity_table)
for entry in report.checks:
    print(f"  {entry.name:34s} {'pass' if entry.passed else 'FAIL'}  {entry.detail}")
