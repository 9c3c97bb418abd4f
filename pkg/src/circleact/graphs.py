"""Signed labelled 2-regular multigraphs attached to dim-4 fixed point data.

Each fixed point is a vertex carrying its sign; each weight w pairs two
fixed points lying on a common invariant 2-sphere, giving an edge with
label w.  Every vertex therefore has exactly two incident edge-ends and
no edge is a loop.  Parallel edges are meaningful and preserved.

Three properties characterize the graphs that arise from manifolds:

  effective    -- the two labels at each vertex are coprime,
  equal modulo -- for every edge e = (v1,v2), with e_i the other edge at
                  v_i:  -sign(v1)*label(e1) == sign(v2)*label(e2) (mod label(e)),
  minimal      -- every edge of globally smallest label joins vertices of
                  opposite signs.

A graph with all three is realizable; realization delegates to the
data-level decider, which is equivalent and avoids rewiring subtleties
in intermediate graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .data import FixedPointData, FixedPointDatum, ParseError, Violation
from .decide import decide
from .ops import AddSphere, BlowUp, StepInapplicableError, Trace, replay


class InvalidGraphError(ValueError):
    """The multigraph violates a structural requirement."""


class TraceInvalidError(ValueError):
    """The trace does not replay, so no graph can be built from it."""


class InternalInconsistencyError(RuntimeError):
    """A graph passed every realizability property but the decider refused
    its data.  This cannot happen for a correct implementation."""


@dataclass(frozen=True)
class Vertex:
    id: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class Edge:
    """Unordered endpoints, normalized to u <= v."""

    u: int
    v: int
    label: int

    def __post_init__(self) -> None:
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    def other_end(self, vertex_id: int) -> int:
        return self.v if vertex_id == self.u else self.u


@dataclass(frozen=True)
class Multigraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        vs = tuple(sorted(self.vertices, key=lambda v: v.id))
        ids = [v.id for v in vs]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        known = set(ids)
        es = tuple(sorted(self.edges, key=lambda e: (e.u, e.v, e.label)))
        for e in es:
            if e.u not in known or e.v not in known:
                raise ValueError(f"edge {e} references an unknown vertex")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    def sign_of(self, vertex_id: int) -> int:
        for v in self.vertices:
            if v.id == vertex_id:
                return v.sign
        raise KeyError(vertex_id)

    def incident(self, vertex_id: int) -> list[int]:
        """Indices into ``edges`` of the edges at a vertex; loops count twice."""
        out = []
        for i, e in enumerate(self.edges):
            if e.u == vertex_id:
                out.append(i)
            if e.v == vertex_id:
                out.append(i)
        return out

    def canonical_key(self) -> tuple:
        """Invariant used to compare graphs up to renaming of vertex ids.

        Vertices are described by (sign, incident label multiset); edges by
        their endpoint descriptors plus label.
        """
        desc = {
            v.id: (v.sign, tuple(sorted(self.edges[i].label for i in self.incident(v.id))))
            for v in self.vertices
        }
        vkey = tuple(sorted(desc.values()))
        ekey = tuple(
            sorted(
                (min(desc[e.u], desc[e.v]), max(desc[e.u], desc[e.v]), e.label)
                for e in self.edges
            )
        )
        return (vkey, ekey)


@dataclass(frozen=True)
class GraphReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate_graph(graph: Multigraph) -> GraphReport:
    """Structural checks: loop-free, 2-regular, positive labels."""
    violations: list[Violation] = []
    for i, e in enumerate(graph.edges):
        if e.u == e.v:
            violations.append(Violation("Loop", f"edge {i} is a loop at vertex {e.u}", i))
        if e.label < 1:
            violations.append(
                Violation("NonPositiveLabel", f"edge {i} has label {e.label}", i)
            )
    for v in graph.vertices:
        degree = len(graph.incident(v.id))
        if degree != 2:
            violations.append(
                Violation(
                    "NotTwoRegular",
                    f"vertex {v.id} has {degree} edge-ends, expected 2",
                    v.id,
                )
            )
    return GraphReport(not violations, tuple(violations))


@dataclass(frozen=True)
class PropertyCheck:
    ok: bool
    detail: str


@dataclass(frozen=True)
class PropertyReport:
    effective: PropertyCheck
    equal_modulo: PropertyCheck
    minimal: PropertyCheck

    @property
    def all_ok(self) -> bool:
        return self.effective.ok and self.equal_modulo.ok and self.minimal.ok


def check_properties(graph: Multigraph) -> PropertyReport:
    """Evaluate the three realizability properties of a valid graph."""
    report = validate_graph(graph)
    if not report.ok:
        raise InvalidGraphError("; ".join(v.message for v in report.violations))

    effective = PropertyCheck(True, "all vertex label pairs coprime")
    for v in graph.vertices:
        l1, l2 = (graph.edges[i].label for i in graph.incident(v.id))
        if gcd(l1, l2) != 1:
            effective = PropertyCheck(
                False, f"vertex {v.id} has labels {l1}, {l2} with gcd {gcd(l1, l2)}"
            )
            break

    equal_modulo = PropertyCheck(True, "all edge congruences hold")
    for i, e in enumerate(graph.edges):
        at_u = graph.incident(e.u)
        at_v = graph.incident(e.v)
        # "the other edge" at each endpoint; for parallel copies this is
        # the remaining edge-end, not the edge itself
        e1 = next(j for j in at_u if j != i)
        e2 = next(j for j in at_v if j != i)
        lhs = -graph.sign_of(e.u) * graph.edges[e1].label
        rhs = graph.sign_of(e.v) * graph.edges[e2].label
        if (lhs - rhs) % e.label != 0:
            equal_modulo = PropertyCheck(
                False,
                f"edge {e.u}-{e.v} label {e.label}: "
                f"{lhs} != {rhs} (mod {e.label})",
            )
            break

    minimal = PropertyCheck(True, "all smallest-label edges join opposite signs")
    if graph.edges:
        w_min = min(e.label for e in graph.edges)
        for e in graph.edges:
            if e.label == w_min and graph.sign_of(e.u) == graph.sign_of(e.v):
                minimal = PropertyCheck(
                    False,
                    f"edge {e.u}-{e.v} has smallest label {w_min} "
                    f"but both signs {graph.sign_of(e.u):+d}",
                )
                break

    return PropertyReport(effective, equal_modulo, minimal)


def graph_of(trace: Trace) -> Multigraph:
    """Build the multigraph of a construction trace, edge by edge.

    Adding a sphere creates two opposite-sign vertices joined by parallel
    edges labelled a and b.  Blowing up a vertex v = (s,{a,b}) replaces it
    by v1 = (s,{a,a+b}) and v2 = (s,{b,a+b}) joined by a new edge labelled
    a+b; v's a-edge re-attaches to v1 and its b-edge to v2.  When a = b the
    re-attachment is canonical: the earlier-created edge goes to v1.
    """
    try:
        replay(trace)
    except StepInapplicableError as exc:
        raise TraceInvalidError(str(exc)) from exc

    signs: dict[int, int] = {}
    edges: list[list[int]] = []  # [u, v, label]; index is the creation id
    next_id = 0

    def incident_ids(vid: int) -> list[int]:
        return [i for i, e in enumerate(edges) if vid in (e[0], e[1])]

    for step in trace:
        if isinstance(step, AddSphere):
            vp, vm = next_id, next_id + 1
            next_id += 2
            signs[vp] = 1
            signs[vm] = -1
            edges.append([vp, vm, step.a])
            edges.append([vp, vm, step.b])
        elif isinstance(step, BlowUp):
            a, b = step.a, step.b
            want = tuple(sorted((a, b)))
            target = None
            for vid in sorted(signs):
                if signs[vid] != step.sign:
                    continue
                inc = incident_ids(vid)
                if tuple(sorted(edges[i][2] for i in inc)) == want:
                    target = vid
                    break
            if target is None:  # replay succeeded, so a match must exist
                raise AssertionError(f"no vertex for {step} despite valid replay")
            inc = incident_ids(target)
            if a == b:
                e_a, e_b = sorted(inc)
            else:
                e_a = next(i for i in inc if edges[i][2] == a)
                e_b = next(i for i in inc if edges[i][2] == b)
            v1, v2 = next_id, next_id + 1
            next_id += 2
            del signs[target]
            signs[v1] = step.sign
            signs[v2] = step.sign
            for eid, new_v in ((e_a, v1), (e_b, v2)):
                if edges[eid][0] == target:
                    edges[eid][0] = new_v
                else:
                    edges[eid][1] = new_v
            edges.append([v1, v2, a + b])
        else:
            raise TypeError(f"unknown step {step!r}")

    return Multigraph(
        tuple(Vertex(vid, s) for vid, s in signs.items()),
        tuple(Edge(u, v, label) for u, v, label in edges),
    )


def data_of(graph: Multigraph) -> FixedPointData:
    """Read fixed point data off a valid graph: one datum per vertex."""
    report = validate_graph(graph)
    if not report.ok:
        raise InvalidGraphError("; ".join(v.message for v in report.violations))
    return FixedPointData(
        tuple(
            FixedPointDatum(
                v.sign, tuple(graph.edges[i].label for i in graph.incident(v.id))
            )
            for v in graph.vertices
        )
    )


@dataclass(frozen=True)
class Realization:
    realizable: bool
    trace: Trace | None
    properties: PropertyReport


def realize(graph: Multigraph) -> Realization:
    """Realize a valid graph: property checks, then a witness trace.

    A graph with all three properties induces realizable data, so the
    decider must accept; if it ever refused, that would be a bug, reported
    as InternalInconsistencyError rather than a "no".
    """
    properties = check_properties(graph)  # raises InvalidGraphError first
    if not properties.all_ok:
        return Realization(False, None, properties)
    decision = decide(data_of(graph))
    if not decision.realizable:
        raise InternalInconsistencyError(
            f"graph passed all properties but decider found {decision.obstruction}"
        )
    return Realization(True, decision.trace, properties)


def to_dot(graph: Multigraph) -> str:
    """Deterministic DOT text; vertices display as p0, p1, ... in id order."""
    if not graph.vertices:
        return "graph G { }\n"
    index = {v.id: i for i, v in enumerate(graph.vertices)}
    lines = ["graph G {"]
    for v in graph.vertices:
        tag = "+" if v.sign == 1 else "-"
        lines.append(f'  p{index[v.id]} [label="p{index[v.id]} [{tag}]"];')
    for e in sorted(graph.edges, key=lambda e: (index[e.u], index[e.v], e.label)):
        iu, iv = sorted((index[e.u], index[e.v]))
        lines.append(f"  p{iu} -- p{iv} [label={e.label}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- serialization ------------------------------------------------------------
#
#   {"vertices":[{"id":0,"sign":1}],"edges":[{"u":0,"v":1,"label":1}]}

def to_obj(graph: Multigraph) -> dict:
    return {
        "vertices": [{"id": v.id, "sign": v.sign} for v in graph.vertices],
        "edges": [{"u": e.u, "v": e.v, "label": e.label} for e in graph.edges],
    }


def from_obj(obj: object) -> Multigraph:
    if not isinstance(obj, dict):
        raise ParseError("expected an object with 'vertices' and 'edges'")
    raw_vs = obj.get("vertices")
    raw_es = obj.get("edges")
    if not isinstance(raw_vs, list):
        raise ParseError("'vertices' must be a list", "vertices")
    if not isinstance(raw_es, list):
        raise ParseError("'edges' must be a list", "edges")
    vertices = []
    for i, raw in enumerate(raw_vs):
        loc = f"vertices[{i}]"
        if not isinstance(raw, dict) or not isinstance(raw.get("id"), int):
            raise ParseError("expected an object with integer 'id'", loc)
        if raw.get("sign") not in (1, -1):
            raise ParseError(f"sign must be 1 or -1, got {raw.get('sign')!r}", f"{loc}.sign")
        vertices.append(Vertex(raw["id"], raw["sign"]))
    edges = []
    for i, raw in enumerate(raw_es):
        loc = f"edges[{i}]"
        if not isinstance(raw, dict):
            raise ParseError("expected an object", loc)
        for key in ("u", "v", "label"):
            if not isinstance(raw.get(key), int):
                raise ParseError(f"'{key}' must be an integer", f"{loc}.{key}")
        edges.append(Edge(raw["u"], raw["v"], raw["label"]))
    try:
        return Multigraph(tuple(vertices), tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_graph(graph: Multigraph, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(to_obj(graph), indent=2)
    return json.dumps(to_obj(graph), separators=(",", ":"))


def parse_graph(text: str) -> Multigraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_obj(obj)
