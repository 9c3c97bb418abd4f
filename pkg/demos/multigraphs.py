# Multigraphs attached to fixed point data.
#
# Vertices are fixed points (signed); each weight w pairs two fixed points
# on a common invariant sphere, drawn as an edge labelled w.  The graphs
# arising from actions are exactly the loop-free 2-regular graphs that are
# effective, satisfy the edge congruences, and whose smallest label only
# joins opposite signs.

import circleact as ca

# The triangle of a blown-up sphere rotation.
trace = (ca.AddSphere(1, 1), ca.BlowUp(1, 1, 1))
graph = ca.graph_of(trace)
print("vertex data:", ca.data_of(graph))
print(ca.to_dot(graph))

report = ca.check_properties(graph)
print("effective:   ", report.effective.ok)
print("equal modulo:", report.equal_modulo.ok)
print("minimal:     ", report.minimal.ok)

# Realization goes graph -> data -> decider -> trace.
result = ca.realize(graph)
print("\nrealized by:", [str(s) for s in result.trace])

# Flip the apex sign and the smallest label joins equal signs: not a
# manifold graph any more.
flipped = ca.Multigraph(
    tuple(ca.Vertex(v.id, abs(v.sign)) for v in graph.vertices),
    graph.edges,
)
result = ca.realize(flipped)
print("\nflipped apex realizable:", result.realizable)
print("minimal property:", result.properties.minimal.detail)
