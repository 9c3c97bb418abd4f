"""Fixed point data: signed weight multisets with a canonical form.

An isolated fixed point of a circle action on a compact oriented
2n-manifold carries n positive integer weights (rotation numbers) and a
sign comparing the orientation induced by the weight spaces with the
ambient orientation.  The fixed point data of an action is the multiset,
over all fixed points, of these signed weight multisets.

Everything here is an immutable value.  Construction canonicalizes:
weights are stored sorted non-decreasing inside a point, and points are
stored sorted by (sign descending, weights lexicographic).  Two data sets
compare equal exactly when they are equal as multisets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Malformed serialized fixed point data.

    ``location`` names the offending field, e.g. ``points[2].weights[0]``.
    """

    def __init__(self, message: str, location: str = "<input>"):
        super().__init__(f"{location}: {message}")
        self.location = location


class EmptyDataError(ValueError):
    """The operation needs at least one fixed point."""


@dataclass(frozen=True)
class FixedPointDatum:
    """One fixed point: a sign (+1 or -1) and a multiset of positive weights."""

    sign: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        ws = tuple(self.weights)
        if not ws:
            raise ValueError("a fixed point needs at least one weight")
        for w in ws:
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weights must be positive integers, got {w!r}")
        object.__setattr__(self, "weights", tuple(sorted(ws)))

    @property
    def arity(self) -> int:
        return len(self.weights)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # canonical order: sign descending, then weights lexicographic
        return (-self.sign, self.weights)

    def reversed(self) -> "FixedPointDatum":
        return FixedPointDatum(-self.sign, self.weights)

    def __str__(self) -> str:
        s = "+" if self.sign == 1 else "-"
        return "{%s,%s}" % (s, ",".join(str(w) for w in self.weights))


@dataclass(frozen=True)
class FixedPointData:
    """A multiset of fixed points of uniform arity, stored canonically."""

    points: tuple[FixedPointDatum, ...]

    def __post_init__(self) -> None:
        pts = tuple(sorted(self.points, key=FixedPointDatum.sort_key))
        if pts:
            n = pts[0].arity
            for p in pts:
                if p.arity != n:
                    raise ValueError(
                        f"mixed arities: point {p} has {p.arity} weights, expected {n}"
                    )
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, *points: Sequence[int]) -> "FixedPointData":
        """Build from ``(sign, w1, ..., wn)`` tuples.

        >>> FixedPointData.of((1, 1, 2), (-1, 1, 2))
        """
        return cls(tuple(FixedPointDatum(p[0], tuple(p[1:])) for p in points))

    @property
    def arity(self) -> int:
        return self.points[0].arity if self.points else 0

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[FixedPointDatum]:
        return iter(self.points)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.points) + "}"


EMPTY = FixedPointData(())


def canonicalize(data: FixedPointData) -> FixedPointData:
    """Return the canonical form (idempotent; construction already sorts)."""
    return FixedPointData(data.points)


def reverse_orientation(data: FixedPointData) -> FixedPointData:
    """Flip every sign.  An involution."""
    return FixedPointData(tuple(p.reversed() for p in data.points))


def make_effective(data: FixedPointData) -> FixedPointData:
    """Divide all weights by their global gcd, so the result has gcd 1.

    Quotienting a circle action by the cyclic subgroup that acts trivially
    divides every weight by the subgroup's order; this is the data-level
    counterpart.
    """
    if not data.points:
        raise EmptyDataError("cannot make empty data effective")
    g = 0
    for p in data.points:
        for w in p.weights:
            g = gcd(g, w)
    if g == 1:
        return data
    return FixedPointData(
        tuple(
            FixedPointDatum(p.sign, tuple(w // g for w in p.weights))
            for p in data.points
        )
    )


# --- validation ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    index: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


GENERAL = "general"
EFFECTIVE_DIM4 = "effective-dim4"


def validate(data: FixedPointData, mode: str = GENERAL) -> ValidationReport:
    """Check structural and effectiveness constraints, report-style.

    ``general`` re-asserts positivity and uniform arity (enforced at
    construction, so constructed values always pass).  ``effective-dim4``
    additionally requires arity 2 and coprime weights at every point: a
    common factor g > 1 at a point would mean the order-g cyclic subgroup
    acts trivially near that point, so the action could not be effective
    on a connected manifold.
    """
    if mode not in (GENERAL, EFFECTIVE_DIM4):
        raise ValueError(f"unknown validation mode {mode!r}")
    violations: list[Violation] = []
    arity = data.arity
    for i, p in enumerate(data.points):
        for w in p.weights:
            if w < 1:
                violations.append(
                    Violation("NonPositiveWeight", f"weight {w} at point {i}", i)
                )
        if p.arity != arity:
            violations.append(
                Violation("MixedArity", f"point {i} has arity {p.arity}, expected {arity}", i)
            )
    if mode == EFFECTIVE_DIM4 and data.points:
        if arity != 2:
            violations.append(
                Violation("ArityNotTwo", f"effective-dim4 needs arity 2, got {arity}", None)
            )
        else:
            for i, p in enumerate(data.points):
                a, b = p.weights
                if gcd(a, b) != 1:
                    violations.append(
                        Violation(
                            "NonEffectivePoint",
                            f"point {i} = {p} has gcd({a},{b}) = {gcd(a, b)}",
                            i,
                        )
                    )
    return ValidationReport(not violations, tuple(violations))


# --- serialization ----------------------------------------------------------
#
# Interchange format, used by every CLI command:
#   {"points":[{"sign":1,"weights":[1,2]},...]}
# Point and weight order is irrelevant on input and canonical on output.

def to_obj(data: FixedPointData) -> dict:
    return {
        "points": [
            {"sign": p.sign, "weights": list(p.weights)} for p in data.points
        ]
    }


def from_obj(obj: object) -> FixedPointData:
    if not isinstance(obj, dict):
        raise ParseError("expected an object with a 'points' field")
    if "points" not in obj:
        raise ParseError("missing 'points' field")
    raw_points = obj["points"]
    if not isinstance(raw_points, list):
        raise ParseError("'points' must be a list", "points")
    points: list[FixedPointDatum] = []
    arity: int | None = None
    for i, raw in enumerate(raw_points):
        loc = f"points[{i}]"
        if not isinstance(raw, dict):
            raise ParseError("expected an object", loc)
        sign = raw.get("sign")
        if sign not in (1, -1):
            raise ParseError(f"sign must be 1 or -1, got {sign!r}", f"{loc}.sign")
        weights = raw.get("weights")
        if not isinstance(weights, list) or not weights:
            raise ParseError("weights must be a non-empty list", f"{loc}.weights")
        for j, w in enumerate(weights):
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ParseError(
                    f"weight must be a positive integer, got {w!r}",
                    f"{loc}.weights[{j}]",
                )
        if arity is None:
            arity = len(weights)
        elif len(weights) != arity:
            raise ParseError(
                f"arity {len(weights)} differs from arity {arity} of points[0]",
                f"{loc}.weights",
            )
        points.append(FixedPointDatum(sign, tuple(weights)))
    return FixedPointData(tuple(points))


def serialize(data: FixedPointData, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(to_obj(data), indent=2)
    return json.dumps(to_obj(data), separators=(",", ":"))


def parse(text: str) -> FixedPointData:
    """Parse the interchange format; round-trips with :func:`serialize`."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_obj(obj)
