"""Semistability calculus for decorated filtrations.

A weighted filtration is reduced to its discrete invariants (ranks,
degrees, Hilbert polynomials, weights); the decoration enters only
through its nonvanishing profile, the set of index tuples on which it
does not vanish.  Everything downstream of that (the M and L
functionals, mu, the delta/slope/asymptotic verdicts, admissible
deformations) is exact arithmetic on these data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .errors import InvalidDelta, MalformedFiltration, ProfileMismatch
from .exactmath import Order, UniPoly, is_positive, poly_order, rational
from .flags import weight_vector_of_filtration


@dataclass(frozen=True)
class FiltrationMember:
    rank: int
    degree: Fraction
    hilb: UniPoly
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", rational(self.degree))
        object.__setattr__(self, "alpha", rational(self.alpha))


@dataclass(frozen=True)
class FiltrationData:
    """Discrete invariants of a weighted filtration of a torsion-free sheaf."""

    total_rank: int
    total_degree: Fraction
    total_hilb: UniPoly
    members: tuple[FiltrationMember, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "total_degree", rational(self.total_degree))
        ranks = [m.rank for m in self.members]
        if any(not 0 < k < self.total_rank for k in ranks) or any(
            ranks[i] >= ranks[i + 1] for i in range(len(ranks) - 1)
        ):
            raise MalformedFiltration(
                f"member ranks must satisfy 0 < rk_1 < ... < rk_t < {self.total_rank}"
            )
        if any(m.alpha <= 0 for m in self.members):
            raise MalformedFiltration("alphas must be positive")
        for m in self.members:
            if poly_order(m.hilb, self.total_hilb) is not Order.LESS:
                raise MalformedFiltration(
                    "member Hilbert polynomial must be asymptotically below the total"
                )

    @property
    def steps(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class NonvanishingProfile:
    """Sorted index tuples over 1..steps+1 on which the decoration survives.

    Must contain the all-top tuple and be upward closed for the
    componentwise order on sorted tuples.
    """

    steps: int
    tuple_len: int
    tuples: frozenset[tuple[int, ...]]

    def __post_init__(self) -> None:
        top = (self.steps + 1,) * self.tuple_len
        tuples = frozenset(tuple(sorted(t)) for t in self.tuples)
        object.__setattr__(self, "tuples", tuples)
        for t in tuples:
            if len(t) != self.tuple_len:
                raise ProfileMismatch(f"tuple {t} has length {len(t)}, expected {self.tuple_len}")
            if any(not 1 <= i <= self.steps + 1 for i in t):
                raise ProfileMismatch(f"tuple {t} leaves the alphabet 1..{self.steps + 1}")
        if top not in tuples:
            raise ProfileMismatch("profile must contain the all-top tuple")
        for t in tuples:
            for u in _dominating_tuples(t, self.steps + 1):
                if u not in tuples:
                    raise ProfileMismatch(
                        f"profile is not upward closed: {t} present but {u} missing"
                    )


def _dominating_tuples(t: tuple[int, ...], top: int):
    """All sorted tuples componentwise >= the sorted tuple t."""
    ranges = [range(i, top + 1) for i in t]
    for cand in itertools.product(*ranges):
        if all(cand[k] <= cand[k + 1] for k in range(len(cand) - 1)):
            yield cand


def full_profile(steps: int, tuple_len: int) -> NonvanishingProfile:
    """The profile containing every sorted tuple (nowhere-vanishing decoration)."""
    tuples = frozenset(
        itertools.combinations_with_replacement(range(1, steps + 2), tuple_len)
    )
    return NonvanishingProfile(steps, tuple_len, tuples)


def functional_M(filtration: FiltrationData) -> UniPoly:
    """Polynomial semistability functional of the weighted filtration."""
    total = UniPoly.zero()
    for m in filtration.members:
        term = filtration.total_hilb.scale(m.rank) - m.hilb.scale(filtration.total_rank)
        total = total + term.scale(m.alpha)
    return total


def functional_L(filtration: FiltrationData) -> Fraction:
    """Degree (slope) semistability functional of the weighted filtration."""
    total = Fraction(0)
    for m in filtration.members:
        total += m.alpha * (
            m.rank * filtration.total_degree - filtration.total_rank * m.degree
        )
    return total


def block_weights(filtration: FiltrationData) -> tuple[Fraction, ...]:
    """Distinct values of the associated weight vector, ascending (t+1 of them)."""
    if not filtration.members:
        return (Fraction(0),)
    vector = weight_vector_of_filtration(
        [m.rank for m in filtration.members],
        [m.alpha for m in filtration.members],
        filtration.total_rank,
    )
    out = []
    for e in vector.entries:
        if not out or e != out[-1]:
            out.append(e)
    return tuple(out)


def mu_profile(
    filtration: FiltrationData, profile: NonvanishingProfile
) -> Fraction:
    """Negative minimum, over the profile, of the summed block weights."""
    if profile.steps != filtration.steps:
        raise ProfileMismatch(
            f"profile has {profile.steps} steps, filtration has {filtration.steps}"
        )
    gamma = block_weights(filtration)
    return -min(sum(gamma[i - 1] for i in t) for t in profile.tuples)


ModelEntry = tuple[FiltrationData, NonvanishingProfile]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a semistability check over a supplied filtration set."""

    semistable: bool
    witness_index: Optional[int] = None


def delta_semistable(
    model: Sequence[ModelEntry], delta: UniPoly, strict: bool = False
) -> Verdict:
    """M + delta * mu (>=) 0 over every supplied filtration."""
    if not is_positive(delta):
        raise InvalidDelta("delta must be asymptotically positive")
    for index, (filtration, profile) in enumerate(model):
        value = functional_M(filtration) + delta.scale(mu_profile(filtration, profile))
        order = poly_order(value, UniPoly.zero())
        if order is Order.LESS or (strict and order is Order.EQUAL):
            return Verdict(False, index)
    return Verdict(True)


def slope_semistable(
    model: Sequence[ModelEntry], delta_bar: Fraction, strict: bool = False
) -> Verdict:
    """L + delta_bar * mu (>=) 0 over every supplied filtration."""
    delta_bar = rational(delta_bar)
    if delta_bar < 0:
        raise InvalidDelta("delta_bar must be nonnegative")
    for index, (filtration, profile) in enumerate(model):
        value = functional_L(filtration) + delta_bar * mu_profile(filtration, profile)
        if value < 0 or (strict and value == 0):
            return Verdict(False, index)
    return Verdict(True)


def slope_parameter(delta: UniPoly, dim_x: int) -> Fraction:
    """(dim X - 1)! times the degree-(dim X - 1) coefficient of delta."""
    return factorial(dim_x - 1) * delta.coefficient(dim_x - 1)


def slopy_implication_check(model: Sequence[ModelEntry], delta: UniPoly) -> bool:
    """delta-semistable implies slope-semistable for the derived parameter.

    The base dimension is read off as the degree of the total Hilbert
    polynomial.  Must never return False on consistent filtration data.
    """
    if not model:
        return True
    dim_x = max(1, model[0][0].total_hilb.degree)
    if not delta_semistable(model, delta).semistable:
        return True
    return slope_semistable(model, slope_parameter(delta, dim_x)).semistable


def asymptotic_semistable(
    model: Sequence[ModelEntry], strict: bool = False
) -> Verdict:
    """mu >= 0 everywhere, and M (>=) 0 wherever mu = 0."""
    for index, (filtration, profile) in enumerate(model):
        value = mu_profile(filtration, profile)
        if value < 0:
            return Verdict(False, index)
        if value == 0:
            order = poly_order(functional_M(filtration), UniPoly.zero())
            if order is Order.LESS or (strict and order is Order.EQUAL):
                return Verdict(False, index)
    return Verdict(True)


def admissible_deformation(
    filtration: FiltrationData, profile: NonvanishingProfile
) -> NonvanishingProfile:
    """Profile of the associated graded decoration.

    Keeps exactly the tuples achieving the minimal weight sum, then takes
    the upward closure; preserves M and mu and is idempotent.
    """
    if profile.steps != filtration.steps:
        raise ProfileMismatch(
            f"profile has {profile.steps} steps, filtration has {filtration.steps}"
        )
    gamma = block_weights(filtration)
    sums = {t: sum(gamma[i - 1] for i in t) for t in profile.tuples}
    minimum = min(sums.values())
    kept = [t for t, s in sums.items() if s == minimum]
    closed = set()
    for t in kept:
        closed.update(_dominating_tuples(t, profile.steps + 1))
    return NonvanishingProfile(profile.steps, profile.tuple_len, frozenset(closed))
