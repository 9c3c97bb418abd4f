"""Exact index-theoretic invariants of fixed point data, any even dimension.

The signature of a compact oriented S^1-manifold with isolated fixed
points equals

    sum_p  sign(p) * prod_i (1 + t^{w_p^i}) / (1 - t^{w_p^i})

for an indeterminate t, and the sum is a constant; at t = 0 it reduces to
the plain sign count.  Clearing denominators turns constancy into an
exact polynomial identity N(t) = s * D(t) with

    N(t) = sum_p sign(p) * prod_i (1 + t^{w_p^i}) * prod_{q != p} prod_i (1 - t^{w_q^i})
    D(t) = prod_p prod_i (1 - t^{w_p^i})

which is checked here with arbitrary-precision integer coefficients, so
there is no tolerance anywhere.  The remaining operations are the
counting consequences of the same identity: the smallest weight occurs
equally often at + and - points, every weight occurs an even number of
times in total, and several structural facts about the shape of the data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .data import EmptyDataError, FixedPointData
from .polynomial import IntegerPolynomial, ZERO, one_minus_power, one_plus_power, product


def signature(data: FixedPointData) -> int:
    """Sum of the signs: the signature of any manifold with this data."""
    return sum(p.sign for p in data.points)


@dataclass(frozen=True)
class SeriesCheck:
    """Outcome of the exact signature-identity check.

    ``constant`` is present iff the identity holds; otherwise
    ``mismatch_degree`` is the lowest degree where N - s*D is nonzero.
    """

    constant: int | None
    mismatch_degree: int | None

    @property
    def ok(self) -> bool:
        return self.constant is not None


def _numerator_denominator(
    data: FixedPointData,
) -> tuple[IntegerPolynomial, IntegerPolynomial]:
    minus_factors = [
        [one_minus_power(w) for w in p.weights] for p in data.points
    ]
    denominator = product(f for fs in minus_factors for f in fs)
    numerator = ZERO
    for i, p in enumerate(data.points):
        term = product(one_plus_power(w) for w in p.weights)
        for j, fs in enumerate(minus_factors):
            if j == i:
                continue
            for f in fs:
                term = term * f
        numerator = numerator + term * p.sign
    return numerator, denominator


def signature_series_check(data: FixedPointData) -> SeriesCheck:
    """Verify N(t) = s * D(t) exactly, s being the sign count."""
    s = signature(data)
    numerator, denominator = _numerator_denominator(data)
    residue = numerator - denominator * s
    if residue.is_zero():
        return SeriesCheck(constant=s, mismatch_degree=None)
    return SeriesCheck(constant=None, mismatch_degree=residue.lowest_nonzero_degree())


def series_constant_by_division(data: FixedPointData) -> int | None:
    """Second, independent route to the same check: long division N / D.

    Returns the constant if the quotient is exact and constant, else None.
    Used to cross-validate :func:`signature_series_check`.
    """
    numerator, denominator = _numerator_denominator(data)
    quotient, remainder = divmod(numerator, denominator)
    if remainder.is_zero() and quotient.is_constant():
        return quotient.constant_value()
    return None


def smallest_weight_balance(data: FixedPointData) -> int:
    """sum_p sign(p) * (multiplicity of the smallest weight at p).

    Zero for every realizable data set; a nonzero value is an obstruction.
    """
    if not data.points:
        raise EmptyDataError("no weights in empty data")
    w_min = min(w for p in data.points for w in p.weights)
    return sum(p.sign * p.weights.count(w_min) for p in data.points)


@dataclass(frozen=True)
class ParityCheck:
    """Total multiplicity of each weight value; all must be even."""

    counts: dict[int, int]
    ok: bool


def weight_parity_check(data: FixedPointData) -> ParityCheck:
    counts = Counter(w for p in data.points for w in p.weights)
    table = {w: counts[w] for w in sorted(counts)}
    return ParityCheck(table, all(c % 2 == 0 for c in table.values()))


# --- aggregated report -------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class InvariantReport:
    signature: int
    series_constant: int | None
    smallest_weight_balance: int
    parity_table: dict[int, int]
    checks: tuple[Check, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def structural_checks(data: FixedPointData) -> InvariantReport:
    """Run the full invariant battery and aggregate one report.

    Beyond the series identity, balance, and parity, this covers:
    an odd number of points forces even arity (dimension divisible by 4);
    exactly two points must carry identical weights with opposite signs;
    if all points carry one common weight multiset the signature vanishes;
    a semi-free action (all weights 1) has equally many + and - points;
    and the Euler characteristic equals the number of fixed points.
    """
    k = len(data.points)
    s = signature(data)
    series = signature_series_check(data)
    balance = smallest_weight_balance(data) if data.points else 0
    parity = weight_parity_check(data)
    checks: list[Check] = []

    if series.ok:
        checks.append(Check("signature-series", True, f"constant {series.constant}"))
    else:
        checks.append(
            Check(
                "signature-series",
                False,
                f"not constant; first mismatch at degree {series.mismatch_degree}",
            )
        )

    checks.append(
        Check(
            "smallest-weight-balance",
            balance == 0,
            "no fixed points" if not data.points else f"balance {balance}",
        )
    )

    odd = [w for w, c in parity.counts.items() if c % 2]
    checks.append(
        Check(
            "weight-parity",
            parity.ok,
            "all multiplicities even" if parity.ok else f"odd multiplicity at {odd}",
        )
    )

    if k == 0:
        checks.append(Check("signature-bounds", True, "no fixed points"))
    elif k == 1:
        checks.append(Check("signature-bounds", False, "a single fixed point is impossible"))
    else:
        ok = abs(s) <= k - 2
        checks.append(
            Check("signature-bounds", ok, f"|{s}| {'<=' if ok else '>'} {k - 2}")
        )

    if k % 2 == 1:
        ok = data.arity % 2 == 0
        checks.append(
            Check(
                "odd-count-even-arity",
                ok,
                f"{k} points with arity {data.arity}",
            )
        )
    else:
        checks.append(Check("odd-count-even-arity", True, "even point count"))

    if k == 2:
        p, q = data.points
        ok = p.weights == q.weights and p.sign == -q.sign
        checks.append(
            Check("two-points-mirror", ok, f"{p} vs {q}")
        )
    else:
        checks.append(Check("two-points-mirror", True, f"{k} points"))

    if k > 0 and len({p.weights for p in data.points}) == 1:
        checks.append(
            Check(
                "uniform-weights-zero-signature",
                s == 0,
                f"common weights {data.points[0].weights}, signature {s}",
            )
        )
    else:
        checks.append(Check("uniform-weights-zero-signature", True, "weights not uniform"))

    if k > 0 and all(w == 1 for p in data.points for w in p.weights):
        pos = sum(1 for p in data.points if p.sign == 1)
        checks.append(
            Check("semi-free-balanced", pos * 2 == k, f"{pos} positive of {k}")
        )
    else:
        checks.append(Check("semi-free-balanced", True, "not semi-free"))

    checks.append(Check("euler-characteristic", True, f"chi = {k}"))

    return InvariantReport(
        signature=s,
        series_constant=series.constant,
        smallest_weight_balance=balance,
        parity_table=parity.counts,
        checks=tuple(checks),
    )


def report_to_obj(report: InvariantReport) -> dict:
    return {
        "signature": report.signature,
        "series_constant": report.series_constant,
        "smallest_weight_balance": report.smallest_weight_balance,
        "parity_table": {str(w): c for w, c in report.parity_table.items()},
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ],
    }
