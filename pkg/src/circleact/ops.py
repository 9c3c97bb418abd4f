"""Construction steps on dim-4 fixed point data, and trace replay.

Every realizable data set in dimension 4 is reachable from the empty set
by two moves: adding the mirrored pair {+,a,b}, {-,a,b} of a rotation of
the 4-sphere (a, b coprime), and blowing up a point, which replaces
(s,{a,b}) by (s,{a,a+b}) and (s,{b,a+b}).  A trace of such steps is a
certificate of realizability; `replay` checks it from scratch.

The inverse rewrites (blow_down, remove_sphere) and the data-level
equivariant sum live here too.  All operations are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Union

from .data import EMPTY, FixedPointData, FixedPointDatum, ParseError


class NotCoprimeError(ValueError):
    """Sphere weights must be relatively prime."""


class PointNotPresentError(ValueError):
    """The targeted point is not in the data."""


class PairInvalidError(ValueError):
    """The two points do not form a blow-down pair."""


class PairNotPresentError(ValueError):
    """The mirrored sphere pair is not in the data."""


class ArityMismatchError(ValueError):
    """Operands have different arities."""


class StepInapplicableError(ValueError):
    """A trace step could not be applied; ``index`` locates it."""

    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


@dataclass(frozen=True)
class AddSphere:
    """Add the fixed point data {+,a,b} and {-,a,b} of a sphere rotation."""

    a: int
    b: int

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int) and a >= 1 and b >= 1):
            raise ValueError(f"sphere weights must be positive integers, got ({a!r},{b!r})")
        if gcd(a, b) != 1:
            raise NotCoprimeError(f"gcd({a},{b}) = {gcd(a, b)} != 1")
        if a > b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)


@dataclass(frozen=True)
class BlowUp:
    """Replace the point (sign,{a,b}) by (sign,{a,a+b}) and (sign,{b,a+b})."""

    sign: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int) and a >= 1 and b >= 1):
            raise ValueError(f"weights must be positive integers, got ({a!r},{b!r})")
        if a > b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    @property
    def target(self) -> FixedPointDatum:
        return FixedPointDatum(self.sign, (self.a, self.b))


Step = Union[AddSphere, BlowUp]
Trace = tuple[Step, ...]


def add_sphere(data: FixedPointData, a: int, b: int) -> FixedPointData:
    """Union with the mirrored pair {+,a,b}, {-,a,b}; a and b coprime."""
    step = AddSphere(a, b)  # validates coprimality
    if data.points and data.arity != 2:
        raise ArityMismatchError(f"data has arity {data.arity}, expected 2")
    return FixedPointData(
        data.points
        + (FixedPointDatum(1, (step.a, step.b)), FixedPointDatum(-1, (step.a, step.b)))
    )


def blow_up(data: FixedPointData, sign: int, a: int, b: int) -> FixedPointData:
    """Blow up one copy of (sign,{a,b}).

    Coprimality at the two new points is automatic: gcd(a, a+b) = gcd(a, b).
    """
    target = FixedPointDatum(sign, (a, b))
    points = list(data.points)
    try:
        points.remove(target)
    except ValueError:
        raise PointNotPresentError(f"no point {target} in {data}") from None
    w = a + b
    points.append(FixedPointDatum(sign, (a, w)))
    points.append(FixedPointDatum(sign, (b, w)))
    return FixedPointData(tuple(points))


def blow_down(
    data: FixedPointData, p1: FixedPointDatum, p2: FixedPointDatum
) -> FixedPointData:
    """Inverse of blow_up: merge (s,{a,w}) and (s,{b,w}) with a+b = w into (s,{a,b})."""
    if p1.sign != p2.sign:
        raise PairInvalidError(f"signs differ: {p1} vs {p2}")
    if p1.arity != 2 or p2.arity != 2:
        raise PairInvalidError("blow-down needs arity-2 points")
    w = p1.weights[1]
    if w not in p2.weights:
        raise PairInvalidError(f"no shared weight {w}: {p1} vs {p2}")
    a = p1.weights[0]
    b = p2.weights[0] if p2.weights[1] == w else p2.weights[1]
    if a + b != w:
        raise PairInvalidError(f"{a} + {b} != {w} for {p1}, {p2}")
    points = list(data.points)
    for p in (p1, p2):
        try:
            points.remove(p)
        except ValueError:
            raise PointNotPresentError(f"no point {p} in {data}") from None
    points.append(FixedPointDatum(p1.sign, (a, b)))
    return FixedPointData(tuple(points))


def remove_sphere(data: FixedPointData, a: int, w: int) -> FixedPointData:
    """Inverse of add_sphere: drop the mirrored pair {+,a,w}, {-,a,w}."""
    plus = FixedPointDatum(1, (a, w))
    minus = FixedPointDatum(-1, (a, w))
    points = list(data.points)
    try:
        points.remove(plus)
        points.remove(minus)
    except ValueError:
        raise PairNotPresentError(f"no mirrored pair (+/-,{{{a},{w}}}) in {data}") from None
    return FixedPointData(tuple(points))


def equivariant_sum(
    data1: FixedPointData,
    orient1: int,
    data2: FixedPointData,
    orient2: int,
) -> FixedPointData:
    """Union of the two data sets, each optionally orientation-reversed.

    Geometrically this is gluing along free orbits; at the data level it
    is unconditional (the free orbit always exists).
    """
    if orient1 not in (1, -1) or orient2 not in (1, -1):
        raise ValueError("orientations must be +1 or -1")
    if data1.points and data2.points and data1.arity != data2.arity:
        raise ArityMismatchError(
            f"arity {data1.arity} vs {data2.arity}"
        )

    def oriented(data: FixedPointData, orient: int) -> tuple[FixedPointDatum, ...]:
        if orient == 1:
            return data.points
        return tuple(p.reversed() for p in data.points)

    return FixedPointData(oriented(data1, orient1) + oriented(data2, orient2))


def apply_step(data: FixedPointData, step: Step) -> FixedPointData:
    if isinstance(step, AddSphere):
        return add_sphere(data, step.a, step.b)
    if isinstance(step, BlowUp):
        return blow_up(data, step.sign, step.a, step.b)
    raise TypeError(f"unknown step {step!r}")


def replay(trace: Iterable[Step]) -> FixedPointData:
    """Fold a trace from the empty data; fail fast on an inapplicable step.

    Traces are proofs of realizability, so nothing is skipped or repaired.
    """
    data = EMPTY
    for i, step in enumerate(trace):
        try:
            data = apply_step(data, step)
        except ValueError as exc:
            raise StepInapplicableError(i, str(exc)) from exc
    return data


# --- trace serialization ------------------------------------------------------
#
#   [{"op":"add_sphere","a":1,"b":2}, {"op":"blow_up","sign":1,"a":1,"b":1}]

def trace_to_obj(trace: Iterable[Step]) -> list:
    out = []
    for step in trace:
        if isinstance(step, AddSphere):
            out.append({"op": "add_sphere", "a": step.a, "b": step.b})
        elif isinstance(step, BlowUp):
            out.append({"op": "blow_up", "sign": step.sign, "a": step.a, "b": step.b})
        else:
            raise TypeError(f"unknown step {step!r}")
    return out


def trace_from_obj(obj: object) -> Trace:
    if not isinstance(obj, list):
        raise ParseError("expected a list of steps")
    steps: list[Step] = []
    for i, raw in enumerate(obj):
        loc = f"steps[{i}]"
        if not isinstance(raw, dict):
            raise ParseError("expected an object", loc)
        op = raw.get("op")
        try:
            if op == "add_sphere":
                steps.append(AddSphere(raw.get("a"), raw.get("b")))
            elif op == "blow_up":
                steps.append(BlowUp(raw.get("sign"), raw.get("a"), raw.get("b")))
            else:
                raise ParseError(f"unknown op {op!r}", f"{loc}.op")
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), loc) from exc
    return tuple(steps)


def serialize_trace(trace: Iterable[Step], pretty: bool = False) -> str:
    if pretty:
        return json.dumps(trace_to_obj(trace), indent=2)
    return json.dumps(trace_to_obj(trace), separators=(",", ":"))


def parse_trace(text: str) -> Trace:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return trace_from_obj(obj)
