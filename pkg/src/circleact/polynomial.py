"""Dense integer polynomials with exact arbitrary-precision coefficients.

Just enough arithmetic for clearing denominators in the signature
identity: addition, multiplication, scalar multiples, and long division
by polynomials whose leading coefficient is a unit.  Coefficients are
Python ints, so products of many binomials never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class IntegerPolynomial:
    """coefficients[d] is the coefficient of t^d; trailing zeros trimmed."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        object.__setattr__(self, "coefficients", coeffs[:n])

    @classmethod
    def constant(cls, c: int) -> "IntegerPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntegerPolynomial":
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> Union[int, float]:
        """Degree, with -inf for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial (degree {self.degree})")
        return self.coefficients[0] if self.coefficients else 0

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def lowest_nonzero_degree(self) -> int:
        """Smallest d with a nonzero coefficient; raises on the zero polynomial."""
        for d, c in enumerate(self.coefficients):
            if c != 0:
                return d
        raise ValueError("zero polynomial has no nonzero coefficient")

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntegerPolynomial(tuple(out))

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntegerPolynomial", int]) -> "IntegerPolynomial":
        if isinstance(other, int):
            return IntegerPolynomial(tuple(other * c for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        # skip zero coefficients of the shorter factor: multiplying by a
        # sparse binomial like 1 - t^w stays linear in the degree
        for j, c in enumerate(b):
            if c == 0:
                continue
            for i, d in enumerate(a):
                if d:
                    out[i + j] += c * d
        return IntegerPolynomial(tuple(out))

    __rmul__ = __mul__

    def __divmod__(
        self, divisor: "IntegerPolynomial"
    ) -> tuple["IntegerPolynomial", "IntegerPolynomial"]:
        """Long division over the integers.

        Requires the divisor's leading coefficient to be +1 or -1 so that
        quotient and remainder stay integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coefficients[-1]
        if lead not in (1, -1):
            raise ValueError(
                f"division needs a unit leading coefficient, got {lead}"
            )
        d = len(divisor.coefficients) - 1
        rem = list(self.coefficients)
        quo = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - d - 1, -1, -1):
            q = rem[k + d] * lead  # lead is its own inverse
            quo[k] = q
            if q:
                for i, c in enumerate(divisor.coefficients):
                    rem[k + i] -= q * c
        return IntegerPolynomial(tuple(quo)), IntegerPolynomial(tuple(rem))

    def evaluate(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        acc: Union[int, Fraction] = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            elif d == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{d}")
        return " + ".join(terms)


ZERO = IntegerPolynomial(())
ONE = IntegerPolynomial((1,))


def one_plus_power(w: int) -> IntegerPolynomial:
    """1 + t^w"""
    return IntegerPolynomial((1,) + (0,) * (w - 1) + (1,))


def one_minus_power(w: int) -> IntegerPolynomial:
    """1 - t^w"""
    return IntegerPolynomial((1,) + (0,) * (w - 1) + (-1,))


def product(factors: Iterable[IntegerPolynomial]) -> IntegerPolynomial:
    acc = ONE
    for f in factors:
        acc = acc * f
    return acc
