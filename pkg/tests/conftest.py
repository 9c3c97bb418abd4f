"""Shared strategies and independent oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import strategies as st

import circleact as ca


def _coprime(a: int, b: int) -> tuple[int, int]:
    g = gcd(a, b)
    return (a // g, b // g)


coprime_pairs = st.tuples(st.integers(1, 9), st.integers(1, 9)).map(
    lambda ab: _coprime(*ab)
)
signs = st.sampled_from([1, -1])

dim4_points = st.tuples(signs, coprime_pairs).map(
    lambda t: ca.FixedPointDatum(t[0], t[1])
)

dim4_data = st.lists(dim4_points, max_size=6).map(
    lambda ps: ca.FixedPointData(tuple(ps))
)


@st.composite
def any_arity_data(draw) -> ca.FixedPointData:
    """Data of one random arity between 1 and 4, any weights."""
    n = draw(st.integers(1, 4))
    k = draw(st.integers(0, 5))
    points = tuple(
        ca.FixedPointDatum(
            draw(signs), tuple(draw(st.integers(1, 6)) for _ in range(n))
        )
        for _ in range(k)
    )
    return ca.FixedPointData(points)


@st.composite
def traces(draw, max_steps: int = 6) -> ca.Trace:
    """Random valid construction traces, built step by step."""
    steps: list = []
    data = ca.EMPTY
    for _ in range(draw(st.integers(0, max_steps))):
        if data.points and draw(st.booleans()):
            p = data.points[draw(st.integers(0, len(data.points) - 1))]
            step = ca.BlowUp(p.sign, *p.weights)
        else:
            a, b = draw(coprime_pairs)
            step = ca.AddSphere(a, b)
        steps.append(step)
        data = ca.replay(tuple(steps))
    return tuple(steps)


def rational_signature_sum(data: ca.FixedPointData, t: Fraction) -> Fraction:
    """Independent oracle: evaluate sum_p sign(p) prod (1+t^w)/(1-t^w) at a
    rational t, with fractions instead of polynomials."""
    total = Fraction(0)
    for p in data.points:
        term = Fraction(p.sign)
        for w in p.weights:
            term *= Fraction(1 + t**w, 1 - t**w)
        total += term
    return total


@pytest.fixture
def sphere_pair() -> ca.FixedPointData:
    """Data of a sphere rotation with weights 1, 2."""
    return ca.FixedPointData.of((1, 1, 2), (-1, 1, 2))


@pytest.fixture
def one_blowup() -> ca.FixedPointData:
    """Blow-up of a point of the (1,1) sphere rotation: three fixed points."""
    return ca.FixedPointData.of((-1, 1, 1), (1, 1, 2), (1, 1, 2))


@pytest.fixture
def projective_plane4() -> ca.FixedPointData:
    """The five fixed points of the standard weighted rotation of the
    complex projective 4-space, signs alternating with the index."""
    return ca.FixedPointData.of(
        (1, 1, 2, 3, 4),
        (-1, 1, 1, 2, 3),
        (1, 1, 1, 2, 2),
        (-1, 1, 1, 2, 3),
        (1, 1, 2, 3, 4),
    )
