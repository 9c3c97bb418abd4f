# Building data with the two construction moves, and deciding realizability.
#
# Every realizable dim-4 data set is reachable from nothing by adding
# coprime sphere pairs and blowing up points; the decider searches for a
# reduction back to nothing and returns either a replayable trace or a
# named obstruction.

import circleact as ca

# Forward: construct data step by step.
data = ca.add_sphere(ca.EMPTY, 1, 2)
print("after add_sphere(1,2):   ", data)
data = ca.blow_up(data, 1, 1, 2)
print("after blow_up(+,{1,2}):  ", data)
data = ca.blow_up(data, 1, 1, 3)
print("after blow_up(+,{1,3}):  ", data, " signature", ca.signature(data))

# Backward: the decider recovers a construction on its own.
decision = ca.decide(data)
print("\nrealizable:", decision.realizable)
for step in decision.trace:
    print("  ", step)
assert ca.verify_trace(decision.trace, data)
assert ca.replay(decision.trace) == data

# Unrealizable data comes back with the obstruction that killed it.
for bad in (
    ca.FixedPointData.of((1, 1, 2), (-1, 1, 3)),   # weight 2 occurs once
    ca.FixedPointData.of((1, 1, 1), (1, 1, 1)),    # both signs positive
    ca.FixedPointData.of((1, 1, 5), (1, 3, 5), (-1, 1, 3)),  # dies in the search
):
    decision = ca.decide(bad)
    print(f"\n{bad}")
    print("  ", decision.obstruction.code, "-", decision.obstruction.detail)
