"""Realizability decision for dim-4 fixed point data, with witness traces.

A candidate data set is realizable iff it can be reduced to the empty set
by repeatedly eliminating the current maximum weight w > 1: a point
(s,{a,w}) pairs either with a same-sign point (s,{b,w}) where a + b = w
(undo a blow-up) or with the opposite-sign mirror (-s,{a,w}) (remove a
sphere).  Maximality of w is what makes this dichotomy exhaustive, so the
reduction always attacks the largest weight.  For manifold data the
partner is unique, but for an arbitrary candidate multiset several
partners can look locally valid while only some extend to a full
reduction, so the search backtracks over partner choices and memoizes
failed canonical forms.

Successful reductions are re-emitted in construction order as a trace
that replays to the input; failures carry a named obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .data import EFFECTIVE_DIM4, FixedPointData, ValidationReport, canonicalize, validate
from .invariants import signature, smallest_weight_balance, weight_parity_check
from .ops import (
    AddSphere,
    BlowUp,
    StepInapplicableError,
    Trace,
    blow_down,
    remove_sphere,
    replay,
)


class ValidationFailedError(ValueError):
    """Input is not valid effective dim-4 data; carries the report."""

    def __init__(self, report: ValidationReport):
        super().__init__(
            "; ".join(v.message for v in report.violations) or "invalid input"
        )
        self.report = report


@dataclass(frozen=True)
class Obstruction:
    code: str
    detail: str
    weight: int | None = None


@dataclass(frozen=True)
class Decision:
    """Outcome of `decide`: a replayable trace, or a named obstruction.

    ``backtracked`` records whether any search node succeeded only after
    its first locally-valid partner choice had failed.
    """

    realizable: bool
    trace: Trace | None
    obstruction: Obstruction | None
    backtracked: bool = False


class _Search:
    def __init__(self) -> None:
        self.failed: set[FixedPointData] = set()
        self.backtracked = False

    def run(self, data: FixedPointData) -> Trace | None:
        if not data.points:
            return ()
        w = max(p.weights[1] for p in data.points)
        if w == 1:
            pos = sum(1 for p in data.points if p.sign == 1)
            if 2 * pos != len(data.points):
                return None
            return (AddSphere(1, 1),) * pos
        if data in self.failed:
            return None
        points = data.points
        i_p = next(i for i, p in enumerate(points) if w in p.weights)
        p = points[i_p]
        a = p.weights[0]  # a < w: coprimality rules out (w,w) for w > 1
        tried: set = set()
        failures = 0
        for j, q in enumerate(points):
            if j == i_p or q in tried or w not in q.weights:
                continue
            tried.add(q)
            b = q.weights[0]
            if q.sign == p.sign:
                if a + b != w:
                    continue
                sub = self.run(blow_down(data, p, q))
                if sub is not None:
                    if failures:
                        self.backtracked = True
                    return sub + (BlowUp(p.sign, a, b),)
            else:
                if b != a:
                    continue
                sub = self.run(remove_sphere(data, a, w))
                if sub is not None:
                    if failures:
                        self.backtracked = True
                    return (AddSphere(a, w),) + sub
            failures += 1
        self.failed.add(data)
        return None


def decide(data: FixedPointData) -> Decision:
    """Decide realizability; on success the trace replays to the input.

    Fast screens reject obviously impossible data with a precise
    obstruction before any search: every weight must occur an even number
    of times, the smallest weight must balance across signs, and with k
    fixed points the sign sum is confined to |s| <= k - 2 (k = 1 is
    outright impossible).  The screens never reject realizable data.
    """
    report = validate(data, EFFECTIVE_DIM4)
    if not report.ok:
        raise ValidationFailedError(report)
    data = canonicalize(data)
    if not data.points:
        return Decision(True, (), None)

    parity = weight_parity_check(data)
    if not parity.ok:
        odd = [w for w, c in parity.counts.items() if c % 2]
        return Decision(
            False, None, Obstruction("weight-parity", f"odd multiplicity at {odd}")
        )
    balance = smallest_weight_balance(data)
    if balance != 0:
        return Decision(
            False,
            None,
            Obstruction("smallest-weight-balance", f"balance {balance} != 0"),
        )
    k = len(data.points)
    s = signature(data)
    if k == 1 or abs(s) > k - 2:
        return Decision(
            False,
            None,
            Obstruction("signature-bounds", f"signature {s} with {k} points"),
        )

    search = _Search()
    trace = search.run(data)
    if trace is None:
        w = max(p.weights[1] for p in data.points)
        return Decision(
            False,
            None,
            Obstruction(
                "search-exhausted",
                f"every pairing at weight {w} fails",
                weight=w,
            ),
            backtracked=search.backtracked,
        )
    return Decision(True, trace, None, backtracked=search.backtracked)


def verify_trace(trace: Trace, data: FixedPointData) -> bool:
    """True iff the trace replays exactly to the canonical form of ``data``."""
    try:
        result = replay(trace)
    except StepInapplicableError:
        return False
    return result == canonicalize(data)
