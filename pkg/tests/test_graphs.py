"""Signed labelled multigraphs: construction, properties, realization, DOT."""

from __future__ import annotations

import pytest
from hypothesis import given

import circleact as ca
from circleact.graphs import Edge, Multigraph, Vertex
from conftest import traces

TRIANGLE_TRACE = (ca.AddSphere(1, 1), ca.BlowUp(1, 1, 1))

TRIANGLE_DOT = """\
graph G {
  p0 [label="p0 [-]"];
  p1 [label="p1 [+]"];
  p2 [label="p2 [+]"];
  p0 -- p1 [label=1];
  p0 -- p2 [label=1];
  p1 -- p2 [label=2];
}
"""


def triangle(sign_top: int = -1) -> Multigraph:
    """Triangle with labels 1, 1, 2; the apex sign is configurable."""
    return Multigraph(
        (Vertex(0, sign_top), Vertex(1, 1), Vertex(2, 1)),
        (Edge(0, 1, 1), Edge(0, 2, 1), Edge(1, 2, 2)),
    )


def double_edge(l1: int, l2: int) -> Multigraph:
    return Multigraph(
        (Vertex(0, 1), Vertex(1, -1)), (Edge(0, 1, l1), Edge(0, 1, l2))
    )


class TestValidateGraph:
    def test_triangle_valid(self):
        assert ca.validate_graph(triangle()).ok

    def test_three_edges_at_a_vertex(self):
        g = Multigraph(
            (Vertex(0, 1), Vertex(1, -1), Vertex(2, 1)),
            (Edge(0, 1, 1), Edge(0, 1, 2), Edge(0, 2, 3), Edge(1, 2, 4)),
        )
        report = ca.validate_graph(g)
        assert not report.ok
        assert any(v.code == "NotTwoRegular" for v in report.violations)

    def test_loop_rejected(self):
        g = Multigraph((Vertex(0, 1),), (Edge(0, 0, 1),))
        report = ca.validate_graph(g)
        assert any(v.code == "Loop" for v in report.violations)

    def test_nonpositive_label_rejected(self):
        report = ca.validate_graph(double_edge(0, 2))
        assert any(v.code == "NonPositiveLabel" for v in report.violations)

    def test_unknown_vertex_rejected_at_construction(self):
        with pytest.raises(ValueError):
            Multigraph((Vertex(0, 1),), (Edge(0, 7, 1),))


class TestProperties:
    def test_triangle_all_pass(self):
        report = ca.check_properties(triangle())
        assert report.all_ok

    def test_minimal_fails_when_apex_sign_flipped(self):
        report = ca.check_properties(triangle(sign_top=1))
        assert not report.minimal.ok
        assert report.effective.ok

    def test_double_edge_1_2_passes(self):
        report = ca.check_properties(double_edge(1, 2))
        assert report.all_ok

    def test_double_edge_2_4_fails_effective(self):
        report = ca.check_properties(double_edge(2, 4))
        assert not report.effective.ok

    def test_equal_modulo_violation(self):
        # triangle with labels 1, 2, 5: effective and minimal hold, but at
        # the label-5 edge -(+1)*1 != (+1)*2 mod 5
        g = Multigraph(
            (Vertex(0, -1), Vertex(1, 1), Vertex(2, 1)),
            (Edge(0, 1, 1), Edge(0, 2, 2), Edge(1, 2, 5)),
        )
        report = ca.check_properties(g)
        assert not report.equal_modulo.ok
        assert report.effective.ok
        assert report.minimal.ok

    def test_invalid_graph_is_an_error(self):
        with pytest.raises(ca.InvalidGraphError):
            ca.check_properties(Multigraph((Vertex(0, 1),), (Edge(0, 0, 1),)))


class TestGraphOf:
    def test_single_sphere_is_a_double_edge(self):
        g = ca.graph_of((ca.AddSphere(1, 2),))
        assert g.canonical_key() == double_edge(1, 2).canonical_key()

    def test_triangle_from_blowup(self):
        g = ca.graph_of(TRIANGLE_TRACE)
        assert g.canonical_key() == triangle().canonical_key()

    def test_blowup_of_distinct_weights(self):
        g = ca.graph_of((ca.AddSphere(1, 2), ca.BlowUp(1, 1, 2)))
        assert ca.data_of(g) == ca.FixedPointData.of((-1, 1, 2), (1, 1, 3), (1, 2, 3))
        assert sorted(e.label for e in g.edges) == [1, 2, 3]
        assert ca.check_properties(g).all_ok

    def test_invalid_trace_rejected(self):
        with pytest.raises(ca.TraceInvalidError):
            ca.graph_of((ca.BlowUp(1, 1, 1),))

    @given(traces())
    def test_data_matches_replay(self, trace):
        assert ca.data_of(ca.graph_of(trace)) == ca.replay(trace)

    @given(traces())
    def test_always_valid_with_all_properties(self, trace):
        g = ca.graph_of(trace)
        assert ca.validate_graph(g).ok
        assert ca.check_properties(g).all_ok

    def test_deterministic(self):
        trace = (ca.AddSphere(1, 1), ca.BlowUp(1, 1, 1), ca.BlowUp(-1, 1, 1))
        assert ca.graph_of(trace) == ca.graph_of(trace)


class TestDataOf:
    def test_triangle(self, one_blowup):
        assert ca.data_of(triangle()) == one_blowup

    def test_double_edge(self, sphere_pair):
        assert ca.data_of(double_edge(1, 2)) == sphere_pair

    def test_invalid_graph_rejected(self):
        with pytest.raises(ca.InvalidGraphError):
            ca.data_of(Multigraph((Vertex(0, 1),), (Edge(0, 0, 1),)))


class TestRealize:
    def test_triangle_realizes_to_known_trace(self):
        result = ca.realize(triangle())
        assert result.realizable
        assert result.trace == TRIANGLE_TRACE

    def test_minimal_violation_not_realizable(self):
        result = ca.realize(triangle(sign_top=1))
        assert not result.realizable
        assert result.trace is None
        assert not result.properties.minimal.ok

    def test_effective_violation_not_realizable(self):
        result = ca.realize(double_edge(2, 4))
        assert not result.realizable
        assert not result.properties.effective.ok

    def test_empty_graph_realizable(self):
        result = ca.realize(Multigraph((), ()))
        assert result.realizable and result.trace == ()


class TestDot:
    def test_empty(self):
        assert ca.to_dot(Multigraph((), ())) == "graph G { }\n"

    def test_double_edge(self):
        assert ca.to_dot(double_edge(1, 2)) == (
            "graph G {\n"
            '  p0 [label="p0 [+]"];\n'
            '  p1 [label="p1 [-]"];\n'
            "  p0 -- p1 [label=1];\n"
            "  p0 -- p1 [label=2];\n"
            "}\n"
        )

    def test_triangle_golden(self):
        assert ca.to_dot(ca.graph_of(TRIANGLE_TRACE)) == TRIANGLE_DOT

    def test_byte_stable(self):
        for _ in range(3):
            assert ca.to_dot(ca.graph_of(TRIANGLE_TRACE)) == TRIANGLE_DOT


class TestGraphSerialization:
    def test_round_trip(self):
        g = ca.graph_of(TRIANGLE_TRACE)
        text = ca.graphs.serialize_graph(g)
        assert ca.graphs.parse_graph(text) == g

    def test_format(self):
        assert ca.graphs.serialize_graph(double_edge(1, 2)) == (
            '{"vertices":[{"id":0,"sign":1},{"id":1,"sign":-1}],'
            '"edges":[{"u":0,"v":1,"label":1},{"u":0,"v":1,"label":2}]}'
        )

    @pytest.mark.parametrize(
        "text",
        [
            "[]",
            '{"vertices":[{"id":0,"sign":2}],"edges":[]}',
            '{"vertices":[{"id":0,"sign":1}],"edges":[{"u":0,"v":9,"label":1}]}',
            '{"vertices":[{"id":0,"sign":1}],"edges":[{"u":0,"label":1}]}',
        ],
    )
    def test_bad_graphs_rejected(self, text):
        with pytest.raises(ca.ParseError):
            ca.graphs.parse_graph(text)
