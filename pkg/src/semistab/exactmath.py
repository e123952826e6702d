"""Exact rational arithmetic and univariate polynomials.

Rationals are `fractions.Fraction` throughout (arbitrary precision,
canonical form for free).  Polynomials are immutable coefficient tuples,
constant term first, with the zero polynomial represented by the empty
tuple, so structural equality is semantic equality.

The asymptotic order `poly_order` compares polynomials by their values at
n >> 0: lexicographically from the highest-degree coefficient downward.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p" for integers, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over Q, coefficients constant-term first."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(rational(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @staticmethod
    def of(*coefficients: RationalLike) -> "UniPoly":
        return UniPoly(tuple(rational(c) for c in coefficients))

    @staticmethod
    def constant(value: RationalLike) -> "UniPoly":
        return UniPoly.of(value)

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def x(power: int = 1) -> "UniPoly":
        return UniPoly((Fraction(0),) * power + (Fraction(1),))

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coefficients:
            return Fraction(0)
        return self.coefficients[-1]

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(
            tuple(self.coefficient(i) - other.coefficient(i) for i in range(n))
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coefficients))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    def scale(self, factor: RationalLike) -> "UniPoly":
        factor = rational(factor)
        return UniPoly(tuple(factor * c for c in self.coefficients))

    def evaluate(self, point: RationalLike) -> Fraction:
        point = rational(point)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * point + c
        return acc

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quot = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coefficients)
        d = other.degree
        lead = other.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coefficients):
                rem[shift + i] -= factor * c
            rem.pop()
        return UniPoly(tuple(quot)), UniPoly(tuple(rem))

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]

    @staticmethod
    def from_json(data: Iterable[RationalLike]) -> "UniPoly":
        return UniPoly(tuple(rational(c) for c in data))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if power == 0:
                parts.append(format_rational(c))
            elif power == 1:
                parts.append(f"{format_rational(c)}*x")
            else:
                parts.append(f"{format_rational(c)}*x^{power}")
        return " + ".join(reversed(parts))


def poly_order(p: UniPoly, q: UniPoly) -> Order:
    """Asymptotic comparison: p before q iff p(n) < q(n) for all n >> 0."""
    diff = p - q
    if diff.is_zero():
        return Order.EQUAL
    return Order.GREATER if diff.leading > 0 else Order.LESS


def is_positive(delta: UniPoly) -> bool:
    """True iff delta(n) > 0 for n >> 0."""
    return poly_order(delta, UniPoly.zero()) is Order.GREATER


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q[x]; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        _, r = divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.scale(Fraction(1) / a.leading)
