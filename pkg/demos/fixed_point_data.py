# Fixed point data basics: building, canonical form, validation, serialization.
#
# A fixed point of a circle action on an oriented 4-manifold carries two
# positive integer rotation numbers (weights) and a sign; the data of an
# action is the multiset of these over all fixed points.

import circleact as ca

# Input order never matters: weights sort within a point, points sort by
# (sign descending, weights lexicographic).
data = ca.FixedPointData.of((-1, 2, 1), (1, 3, 1))
print("canonical form:", data)

# The rotation of the 4-sphere g.(z1, z2, x) = (g^a z1, g^b z2, x) fixes the
# two poles, with identical weights and opposite signs.
sphere = ca.FixedPointData.of((1, 1, 2), (-1, 1, 2))
print("sphere rotation data:", sphere)

# Serialization round-trips through a single JSON object.
text = ca.serialize(sphere)
print("serialized:", text)
assert ca.parse(text) == sphere

# Effectiveness in dimension 4 means coprime weights at every point: a common
# factor g would make the order-g subgroup act trivially near that point.
report = ca.validate(ca.FixedPointData.of((1, 2, 4), (-1, 2, 4)), "effective-dim4")
print("validation of {(+,2,4),(-,2,4)}:", "ok" if report.ok else "violations")
for violation in report.violations:
    print("  ", violation.code, "-", violation.message)

# A non-effective action becomes effective by dividing out the global gcd.
effective = ca.make_effective(ca.FixedPointData.of((1, 2, 4), (-1, 2, 4)))
print("after make_effective:", effective)

# Reversing the manifold orientation flips every sign.
print("orientation reversed:", ca.reverse_orientation(data))
