"""Exact combinatorics of fixed point data for circle actions on
oriented 4-manifolds: realizability decisions with construction traces,
index-theoretic invariant checks in any even dimension, bounded
enumeration, and the associated signed labelled multigraphs.
"""

from .data import (
    EMPTY,
    EmptyDataError,
    FixedPointData,
    FixedPointDatum,
    ParseError,
    ValidationReport,
    Violation,
    canonicalize,
    make_effective,
    parse,
    reverse_orientation,
    serialize,
    validate,
)
from .decide import Decision, Obstruction, ValidationFailedError, decide, verify_trace
from .enumeration import (
    Corpus,
    EnumerationBounds,
    FamilyMatch,
    UnmatchedEntryError,
    candidate_universe,
    classify_small,
    enumerate_data,
    expected_spectrum,
    match_family,
    signature_spectrum,
)
from .graphs import (
    Edge,
    InternalInconsistencyError,
    InvalidGraphError,
    Multigraph,
    PropertyReport,
    Realization,
    TraceInvalidError,
    Vertex,
    check_properties,
    data_of,
    graph_of,
    realize,
    to_dot,
    validate_graph,
)
from .invariants import (
    InvariantReport,
    ParityCheck,
    SeriesCheck,
    signature,
    signature_series_check,
    smallest_weight_balance,
    structural_checks,
    weight_parity_check,
)
from .ops import (
    AddSphere,
    ArityMismatchError,
    BlowUp,
    NotCoprimeError,
    PairInvalidError,
    PairNotPresentError,
    PointNotPresentError,
    StepInapplicableError,
    Trace,
    add_sphere,
    blow_down,
    blow_up,
    equivariant_sum,
    remove_sphere,
    replay,
)
from .polynomial import IntegerPolynomial

__version__ = "0.1.0"

__all__ = [
    "AddSphere",
    "ArityMismatchError",
    "BlowUp",
    "Corpus",
    "Decision",
    "EMPTY",
    "Edge",
    "EmptyDataError",
    "EnumerationBounds",
    "FamilyMatch",
    "FixedPointData",
    "FixedPointDatum",
    "IntegerPolynomial",
    "InternalInconsistencyError",
    "InvalidGraphError",
    "InvariantReport",
    "Multigraph",
    "NotCoprimeError",
    "Obstruction",
    "PairInvalidError",
    "PairNotPresentError",
    "ParityCheck",
    "ParseError",
    "PointNotPresentError",
    "PropertyReport",
    "Realization",
    "SeriesCheck",
    "StepInapplicableError",
    "Trace",
    "TraceInvalidError",
    "UnmatchedEntryError",
    "ValidationFailedError",
    "ValidationReport",
    "Vertex",
    "Violation",
    "add_sphere",
    "blow_down",
    "blow_up",
    "candidate_universe",
    "canonicalize",
    "check_properties",
    "classify_small",
    "data_of",
    "decide",
    "enumerate_data",
    "equivariant_sum",
    "expected_spectrum",
    "graph_of",
    "make_effective",
    "match_family",
    "parse",
    "realize",
    "remove_sphere",
    "replay",
    "reverse_orientation",
    "serialize",
    "signature",
    "signature_series_check",
    "signature_spectrum",
    "smallest_weight_balance",
    "structural_checks",
    "to_dot",
    "validate",
    "validate_graph",
    "verify_trace",
    "weight_parity_check",
]
