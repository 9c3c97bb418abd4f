"""Exhaustive enumeration of realizable dim-4 data within finite bounds.

The reachable set of the construction grammar is closed by breadth-first
search from the empty data: add any coprime sphere pair while at most
max_points - 2 points are present, blow up any point whose weights sum
to at most max_weight.  Both moves only ever grow the point count and
the maximum weight, so the pruning is sound and the closure is exact.

States are deduplicated by canonical form (many traces produce one data
set, since blow-up order commutes at the data level); the breadth-first
parent chain of each state doubles as its witness trace.  Points are
interned as small integers so that a state is a sorted int tuple; at desk
scale the whole corpus fits comfortably in a dict.

The same module hosts the candidate-universe generator used to exercise
the decider on data the grammar can *not* reach.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .data import FixedPointData
from .invariants import signature
from .ops import AddSphere, BlowUp, Trace


class UnmatchedEntryError(RuntimeError):
    """An enumerated entry fits no closed-form family; this would mean the
    small-count classification is wrong, or the enumeration is."""

    def __init__(self, data: FixedPointData):
        super().__init__(f"no family matches {data}")
        self.data = data


@dataclass(frozen=True)
class EnumerationBounds:
    max_points: int
    max_weight: int

    def __post_init__(self) -> None:
        if self.max_points < 0:
            raise ValueError("max_points must be >= 0")
        if self.max_weight < 1:
            raise ValueError("max_weight must be >= 1")


class _PointPool:
    """Interns arity-2 signed points as small integer ids."""

    def __init__(self, max_weight: int):
        self.max_weight = max_weight
        self._ids: dict[tuple[int, int, int], int] = {}
        self._points: list[tuple[int, int, int]] = []
        self._blowups: dict[int, tuple[int, int] | None] = {}

    def intern(self, sign: int, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        key = (sign, a, b)
        pid = self._ids.get(key)
        if pid is None:
            pid = len(self._points)
            self._ids[key] = pid
            self._points.append(key)
        return pid

    def lookup(self, sign: int, a: int, b: int) -> int | None:
        if a > b:
            a, b = b, a
        return self._ids.get((sign, a, b))

    def decode(self, pid: int) -> tuple[int, int, int]:
        return self._points[pid]

    def blowup(self, pid: int) -> tuple[int, int] | None:
        """Ids of the two blow-up products, or None when out of bounds."""
        try:
            return self._blowups[pid]
        except KeyError:
            sign, a, b = self._points[pid]
            if a + b > self.max_weight:
                result = None
            else:
                result = (
                    self.intern(sign, a, a + b),
                    self.intern(sign, b, a + b),
                )
            self._blowups[pid] = result
            return result


def coprime_pairs(max_weight: int) -> list[tuple[int, int]]:
    """All (a, b) with 1 <= a <= b <= max_weight and gcd(a, b) = 1."""
    return [
        (a, b)
        for a in range(1, max_weight + 1)
        for b in range(a, max_weight + 1)
        if gcd(a, b) == 1
    ]


class Corpus:
    """All realizable data within bounds, each with one witness trace."""

    def __init__(
        self,
        bounds: EnumerationBounds,
        pool: _PointPool,
        parent: dict[tuple[int, ...], tuple | None],
    ):
        self.bounds = bounds
        self._pool = pool
        self._parent = parent

    def __len__(self) -> int:
        return len(self._parent)

    def _encode(self, data: FixedPointData) -> tuple[int, ...] | None:
        ids = []
        for p in data.points:
            if p.arity != 2:
                return None
            pid = self._pool.lookup(p.sign, *p.weights)
            if pid is None:
                return None
            ids.append(pid)
        return tuple(sorted(ids))

    def __contains__(self, data: FixedPointData) -> bool:
        key = self._encode(data)
        return key is not None and key in self._parent

    def _decode(self, state: tuple[int, ...]) -> FixedPointData:
        return FixedPointData.of(*(self._pool.decode(pid) for pid in state))

    def _canonical_key(self, state: tuple[int, ...]) -> tuple:
        return tuple(
            sorted(
                (-sign, (a, b))
                for sign, a, b in (self._pool.decode(pid) for pid in state)
            )
        )

    def _ordered_states(self) -> list[tuple[int, ...]]:
        return sorted(
            self._parent, key=lambda st: (len(st), self._canonical_key(st))
        )

    def __iter__(self) -> Iterator[FixedPointData]:
        for state in self._ordered_states():
            yield self._decode(state)

    def _trace_of_state(self, state: tuple[int, ...]) -> Trace:
        steps = []
        while True:
            entry = self._parent[state]
            if entry is None:
                break
            state, packed = entry
            if packed[0] == "s":
                steps.append(AddSphere(packed[1], packed[2]))
            else:
                sign, a, b = self._pool.decode(packed[1])
                steps.append(BlowUp(sign, a, b))
        steps.reverse()
        return tuple(steps)

    def trace_of(self, data: FixedPointData) -> Trace:
        key = self._encode(data)
        if key is None or key not in self._parent:
            raise KeyError(f"{data} is not in the corpus")
        return self._trace_of_state(key)

    def items(self) -> Iterator[tuple[FixedPointData, Trace]]:
        for state in self._ordered_states():
            yield self._decode(state), self._trace_of_state(state)

    def signatures(self, point_count: int) -> set[int]:
        """Signatures occurring among entries with exactly that many points."""
        out = set()
        for state in self._parent:
            if len(state) == point_count:
                out.add(sum(self._pool.decode(pid)[0] for pid in state))
        return out


def enumerate_data(max_points: int, max_weight: int) -> Corpus:
    """Breadth-first closure of the grammar within the given bounds."""
    bounds = EnumerationBounds(max_points, max_weight)
    pool = _PointPool(max_weight)
    spheres = [
        (a, b, pool.intern(1, a, b), pool.intern(-1, a, b))
        for a, b in coprime_pairs(max_weight)
    ]
    parent: dict[tuple[int, ...], tuple | None] = {(): None}
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for state in frontier:
            k = len(state)
            if k + 2 <= max_points:
                for a, b, ip, im in spheres:
                    succ = tuple(sorted(state + (ip, im)))
                    if succ not in parent:
                        parent[succ] = (state, ("s", a, b))
                        nxt.append(succ)
            if k + 1 <= max_points:
                prev = -1
                for idx in range(k):
                    pid = state[idx]
                    if pid == prev:
                        continue
                    prev = pid
                    pair = pool.blowup(pid)
                    if pair is None:
                        continue
                    succ = tuple(sorted(state[:idx] + state[idx + 1 :] + pair))
                    if succ not in parent:
                        parent[succ] = (state, ("b", pid))
                        nxt.append(succ)
        frontier = nxt
    return Corpus(bounds, pool, parent)


def signature_spectrum(point_count: int, max_weight: int) -> set[int]:
    """Signatures of all enumerable data with exactly ``point_count`` points.

    With max_weight >= point_count the spectrum is complete:
    {j : |j| <= k - 2, j == k mod 2} for k points, since iterated blow-ups
    of (1,1)-spheres realize every extreme and spheres pad in steps of two.
    """
    return enumerate_data(point_count, max_weight).signatures(point_count)


def expected_spectrum(point_count: int) -> set[int]:
    """The closed-form spectrum {j : |j| <= k - 2, j == k mod 2}."""
    k = point_count
    return {j for j in range(2 - k, k - 1) if (j - k) % 2 == 0}


# --- closed-form families for few fixed points ---------------------------------

@dataclass(frozen=True)
class FamilyMatch:
    data: FixedPointData
    family: str
    parameters: dict[str, int]
    signature: int


def match_family(data: FixedPointData) -> FamilyMatch:
    """Match 2-, 3-, or 4-point data against its closed-form family.

    sphere                k=2: the mirrored pair {+,a,b}, {-,a,b}
    sphere-blowup         k=3: one sphere, one blow-up
    two-spheres           k=4: two mirrored pairs
    sphere-double-blowup  k=4: one sphere, two same-sign blow-ups
    """
    k = len(data.points)
    s = signature(data)
    if k == 2:
        p, q = data.points
        if p.sign == 1 and q.sign == -1 and p.weights == q.weights:
            a, b = p.weights
            return FamilyMatch(data, "sphere", {"a": a, "b": b}, s)
    elif k == 3 and abs(s) == 1:
        lone = [p for p in data.points if p.sign == -s]
        rest = [p for p in data.points if p.sign == s]
        if len(lone) == 1:
            a, b = lone[0].weights
            expected = sorted([(a, a + b), (b, a + b)])
            if sorted(p.weights for p in rest) == expected:
                return FamilyMatch(data, "sphere-blowup", {"a": a, "b": b}, s)
    elif k == 4 and s == 0:
        plus = sorted(p.weights for p in data.points if p.sign == 1)
        minus = sorted(p.weights for p in data.points if p.sign == -1)
        if len(plus) == 2 and plus == minus:
            (a, b), (c, d) = plus
            return FamilyMatch(
                data, "two-spheres", {"a": a, "b": b, "c": c, "d": d}, s
            )
    elif k == 4 and abs(s) == 2:
        maj = 1 if s > 0 else -1
        lone = [p for p in data.points if p.sign == -maj]
        rest = [p for p in data.points if p.sign == maj]
        if len(lone) == 1:
            x, y = lone[0].weights
            got = sorted(p.weights for p in rest)
            for a, b in ((x, y), (y, x)):
                expected = sorted([(a, a + b), (b, a + 2 * b), (a + b, a + 2 * b)])
                if got == expected:
                    return FamilyMatch(
                        data, "sphere-double-blowup", {"a": a, "b": b}, s
                    )
    raise UnmatchedEntryError(data)


def classify_small(point_count: int, max_weight: int) -> list[FamilyMatch]:
    """Classify every enumerable entry with 2, 3, or 4 points."""
    if point_count not in (2, 3, 4):
        raise ValueError("classification covers 2, 3, or 4 points")
    corpus = enumerate_data(point_count, max_weight)
    return [
        match_family(data)
        for data in corpus
        if len(data.points) == point_count
    ]


def candidate_universe(max_points: int, max_weight: int) -> Iterator[FixedPointData]:
    """Every multiset of signed coprime pairs within the bounds.

    Unlike the corpus, this includes unrealizable data; it is the search
    space over which the decider is compared against enumeration.
    """
    pool = [
        (sign, a, b)
        for a, b in coprime_pairs(max_weight)
        for sign in (1, -1)
    ]
    for k in range(max_points + 1):
        for combo in itertools.combinations_with_replacement(pool, k):
            yield FixedPointData.of(*combo)
