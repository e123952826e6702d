"""Mu-functions on torus-weight representations and instability decisions.

A representation is presented by its weight decomposition under the fixed
maximal torus; mu of a point is the maximum pairing of the 1-PS with the
weights in the point's support.  Instability at torus level is an exact
convex-feasibility question: the point is destabilized by some rational
1-PS iff zero is not in the convex hull of the support weights taken
modulo the all-ones direction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Optional, Sequence

from .errors import DimensionMismatch, TooLarge, TrivialSubgroup
from .exactmath import RationalLike, rational
from .feasibility import feasible_point
from .flags import OneParamSubgroup, WeightedFlag, weighted_flag_of

GRID_RADIUS = 3


@dataclass(frozen=True)
class TorusWeightRep:
    """Basis labels with integer torus weights of length torus_rank."""

    torus_rank: int
    basis: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        if not self.basis:
            raise DimensionMismatch("basis must be nonempty")
        for label, weight in self.basis:
            if len(weight) != self.torus_rank:
                raise DimensionMismatch(
                    f"weight of {label!r} has length {len(weight)}, "
                    f"expected {self.torus_rank}"
                )

    def weight_of(self, label: str) -> tuple[int, ...]:
        for name, weight in self.basis:
            if name == label:
                return weight
        raise DimensionMismatch(f"unknown basis label {label!r}")


@dataclass(frozen=True)
class RepPoint:
    """Sparse point: map from basis label to nonzero coordinate."""

    coords: tuple[tuple[str, Fraction], ...]

    def __post_init__(self) -> None:
        coords = tuple((label, rational(c)) for label, c in self.coords)
        if not coords:
            raise DimensionMismatch("point must have nonempty support")
        if any(c == 0 for _, c in coords):
            raise DimensionMismatch("stored coordinates must be nonzero")
        object.__setattr__(self, "coords", coords)

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.coords)


def _pairing(lam: OneParamSubgroup, weight: Sequence[int]) -> int:
    return sum(g * w for g, w in zip(lam.weights, weight))


def mu(rep: TorusWeightRep, lam: OneParamSubgroup, point: RepPoint) -> int:
    """Maximum weight pairing over the support of the point."""
    if lam.rank != rep.torus_rank:
        raise DimensionMismatch(
            f"1-PS has rank {lam.rank}, representation torus has rank {rep.torus_rank}"
        )
    if lam.is_trivial():
        raise TrivialSubgroup("mu is only defined for nontrivial subgroups")
    return max(_pairing(lam, rep.weight_of(label)) for label in point.support)


def _flags_equal(f1: WeightedFlag, f2: WeightedFlag) -> bool:
    return (
        f1.dims == f2.dims
        and f1.alphas == f2.alphas
        and f1.blocks() == f2.blocks()
    )


def mu_flag_invariance_check(
    rep: TorusWeightRep,
    lam1: OneParamSubgroup,
    lam2: OneParamSubgroup,
    point: RepPoint,
) -> bool:
    """Assert mu(lam1) == mu(lam2) whenever the weighted flags coincide.

    Vacuously true when the flags differ; must never return False.
    """
    if not _flags_equal(weighted_flag_of(lam1), weighted_flag_of(lam2)):
        return True
    return mu(rep, lam1, point) == mu(rep, lam2, point)


@dataclass(frozen=True)
class HullCertificate:
    """Convex coefficients witnessing 0 in the hull modulo the all-ones line."""

    coefficients: tuple[tuple[str, Fraction], ...]
    multiple: Fraction

    def verify(self, rep: TorusWeightRep, point: RepPoint) -> bool:
        support = set(point.support)
        total = Fraction(0)
        combo = [Fraction(0)] * rep.torus_rank
        for label, c in self.coefficients:
            if label not in support or c < 0:
                return False
            total += c
            weight = rep.weight_of(label)
            for a in range(rep.torus_rank):
                combo[a] += c * weight[a]
        return total == 1 and all(x == self.multiple for x in combo)


@dataclass(frozen=True)
class TorusVerdict:
    semistable: bool
    destabilizer: Optional[OneParamSubgroup] = None
    certificate: Optional[HullCertificate] = None


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g > 1:
        return tuple(v // g for v in vec)
    return tuple(vec)


def sum_zero_grid(r: int, radius: int = GRID_RADIUS):
    """All nonzero sum-zero integer vectors in {-radius..radius}^r."""
    for vec in itertools.product(range(-radius, radius + 1), repeat=r):
        if any(vec) and sum(vec) == 0:
            yield vec


def torus_destabilize(rep: TorusWeightRep, point: RepPoint) -> TorusVerdict:
    """Decide instability over the fixed maximal torus.

    Semistable verdicts carry an exact convex-combination certificate;
    unstable verdicts carry a primitive integral destabilizer with mu < 0,
    chosen lexicographically least among the primitive grid minimizers
    when the small search grid already exhibits one.
    """
    r = rep.torus_rank
    weights = [rep.weight_of(label) for label in point.support]
    labels = list(point.support)
    m = len(weights)

    # Hull membership: c >= 0, sum c = 1, sum c_b w_b = t * (1,..,1).
    # Variables: c_1..c_m, t+, t-.
    rows = []
    rhs = []
    rows.append([Fraction(1)] * m + [Fraction(0), Fraction(0)])
    rhs.append(Fraction(1))
    for a in range(r):
        rows.append(
            [Fraction(weights[b][a]) for b in range(m)]
            + [Fraction(-1), Fraction(1)]
        )
        rhs.append(Fraction(0))
    solution = feasible_point(rows, rhs)
    if solution is not None:
        coeffs = tuple(
            (labels[b], solution[b]) for b in range(m) if solution[b] != 0
        )
        cert = HullCertificate(coeffs, solution[m] - solution[m + 1])
        return TorusVerdict(True, certificate=cert)

    # Unstable: prefer a witness from the grid oracle's tie set.
    best_mu = None
    best = None
    for vec in sum_zero_grid(r):
        value = max(sum(g * w for g, w in zip(vec, weight)) for weight in weights)
        if value >= 0:
            continue
        cand = _primitive(vec)
        if best_mu is None or value < best_mu or (value == best_mu and cand < best):
            best_mu = value
            best = cand
    if best is not None:
        return TorusVerdict(False, destabilizer=OneParamSubgroup(best))

    # Grid too small: fall back to exact LP search for lambda with
    # <lambda, w_b> <= -1 for all support weights, sum lambda = 0.
    # Variables: u_1..u_r, v_1..v_r (lambda = u - v), slacks s_1..s_m.
    rows = []
    rhs = []
    rows.append(
        [Fraction(1)] * r + [Fraction(-1)] * r + [Fraction(0)] * m
    )
    rhs.append(Fraction(0))
    for b in range(m):
        row = [Fraction(weights[b][a]) for a in range(r)]
        row += [Fraction(-weights[b][a]) for a in range(r)]
        row += [Fraction(int(b == j)) for j in range(m)]
        rows.append(row)
        rhs.append(Fraction(-1))
    solution = feasible_point(rows, rhs)
    if solution is None:
        raise AssertionError("hull infeasible but no destabilizer found")
    lam = [solution[a] - solution[r + a] for a in range(r)]
    denom = 1
    for value in lam:
        denom = denom * value.denominator // gcd(denom, value.denominator)
    ints = _primitive([int(value * denom) for value in lam])
    return TorusVerdict(False, destabilizer=OneParamSubgroup(ints))


def divided_power_dim(r: int, u: int) -> int:
    """Dimension of the u-th divided power of a rank-r space."""
    if r < 1 or u < 0:
        raise DimensionMismatch("need r >= 1 and u >= 0")
    return comb(r + u - 1, u)


def dd_module_dim(r: int, u: int, v: int) -> int:
    """Sum over compositions of u into v parts of products of divided-power dims."""
    if v < 1:
        raise DimensionMismatch("need v >= 1")
    total = 0
    for parts in _compositions(u, v):
        product = 1
        for part in parts:
            product *= divided_power_dim(r, part)
        total += product
    return total


def _compositions(u: int, v: int):
    if v == 1:
        yield (u,)
        return
    for first in range(u + 1):
        for rest in _compositions(u - first, v - 1):
            yield (first,) + rest


def weighted_compositions(s: int) -> list[tuple[int, ...]]:
    """All (d_1,..,d_s) with d_i >= 0 and sum i*d_i = s!, lexicographic."""
    if s < 1:
        raise TooLarge("s must be at least 1")
    if s > 4:
        raise TooLarge("s > 4 is not supported (tuple length s! explodes)")
    target = 1
    for i in range(2, s + 1):
        target *= i
    out = []

    def extend(prefix: tuple[int, ...], remaining: int) -> None:
        index = len(prefix) + 1
        if index == s:
            if remaining % s == 0:
                out.append(prefix + (remaining // s,))
            return
        for d in range(remaining // index + 1):
            extend(prefix + (d,), remaining - index * d)

    extend((), target)
    out.sort()
    return out
