# Exhaustive enumeration, the realized signature spectrum, and the
# closed-form families with few fixed points.

import circleact as ca

# Everything realizable with at most 4 points and weights at most 4.
corpus = ca.enumerate_data(4, 4)
print(f"enumerate(4,4): {len(corpus)} data sets")
for entry, trace in corpus.items():
    if len(entry) == 3:
        print("  ", entry, " via ", [str(s) for s in trace])

# With k fixed points, exactly the signatures j with |j| <= k-2 and
# j == k (mod 2) occur.
print("\nsignature spectrum (max weight 12):")
for k in range(2, 8):
    print(f"  k={k}: {sorted(ca.signature_spectrum(k, 12))}")

# At 2, 3, 4 points every data set belongs to one closed-form family.
print("\nfamilies at k=4, max weight 5:")
tally: dict[str, int] = {}
for match in ca.classify_small(4, 5):
    tally[match.family] = tally.get(match.family, 0) + 1
for family, count in sorted(tally.items()):
    print(f"  {family}: {count}")

# A sample member of the signature-2 family, with its parameters.
sample = ca.FixedPointData.of((-1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 3))
match = ca.match_family(sample)
print(f"\n{sample} is '{match.family}' with parameters {match.parameters}")
