"""Exact polynomial linear algebra helpers (sympy-backed).

Only the classical module needs genuine algebra over Q[x] (generic ranks,
kernels, gcd-of-minors saturation degrees); sympy supplies that exactly,
and everything is converted back to UniPoly at the boundary.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from .exactmath import UniPoly

_X = sympy.Symbol("x")

PolyMatrix = Sequence[Sequence[UniPoly]]


def to_expr(p: UniPoly):
    expr = sympy.Integer(0)
    for power, c in enumerate(p.coefficients):
        expr += sympy.Rational(c.numerator, c.denominator) * _X**power
    return expr


def from_expr(expr) -> UniPoly:
    poly = sympy.Poly(sympy.together(expr), _X, domain="QQ")
    coeffs = list(reversed(poly.all_coeffs()))
    return UniPoly(tuple(Fraction(c.p, c.q) for c in coeffs))


def _sym_matrix(matrix: PolyMatrix) -> sympy.Matrix:
    return sympy.Matrix([[to_expr(p) for p in row] for row in matrix])


def generic_rank(matrix: PolyMatrix) -> int:
    """Rank over the rational function field Q(x)."""
    if not matrix or not matrix[0]:
        return 0
    return _sym_matrix(matrix).rank()


def determinant(matrix: PolyMatrix) -> UniPoly:
    return from_expr(_sym_matrix(matrix).det(method="berkowitz"))


def maximal_minors(matrix: PolyMatrix, size: int) -> dict[tuple[int, ...], UniPoly]:
    """All size x size minors, keyed by the chosen row index set (0-based)."""
    sym = _sym_matrix(matrix)
    rows, cols = sym.shape
    if cols != size:
        raise ValueError("minor size must equal the column count")
    out = {}
    for subset in combinations(range(rows), size):
        sub = sym[list(subset), :]
        out[subset] = from_expr(sub.det(method="berkowitz"))
    return out


def generic_kernel(matrix: PolyMatrix) -> list[list[UniPoly]]:
    """Primitive polynomial basis columns of the kernel over Q(x)."""
    sym = _sym_matrix(matrix)
    columns = []
    for vec in sym.nullspace():
        entries = [sympy.together(sympy.cancel(e)) for e in vec]
        denoms = [sympy.denom(e) for e in entries]
        common = sympy.lcm(denoms) if denoms else sympy.Integer(1)
        polys = [sympy.expand(e * common) for e in entries]
        content = sympy.gcd([p for p in polys if p != 0])
        polys = [sympy.cancel(p / content) for p in polys]
        columns.append([from_expr(p) for p in polys])
    return columns


def poly_content(polys: Sequence[UniPoly]) -> UniPoly:
    """Monic gcd of a family of polynomials (zero entries ignored)."""
    exprs = [to_expr(p) for p in polys if not p.is_zero()]
    if not exprs:
        return UniPoly.zero()
    return from_expr(sympy.gcd(exprs))
