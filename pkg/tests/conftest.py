"""Shared seeded generators for the property suites."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from semistab import (
    FiltrationData,
    FiltrationMember,
    NonvanishingProfile,
    RepPoint,
    TorusWeightRep,
    UniPoly,
)


def random_fraction(rng: random.Random, lo: int = -6, hi: int = 6) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def random_positive_fraction(rng: random.Random, hi: int = 6) -> Fraction:
    return Fraction(rng.randint(1, hi), rng.randint(1, 4))


def random_filtration(rng: random.Random, max_rank: int = 4) -> FiltrationData:
    """Curve-consistent data: P(n) = r n + d + r, P_j(n) = k_j n + d_j + k_j."""
    r = rng.randint(2, max_rank)
    t = rng.randint(1, min(2, r - 1))
    ranks = sorted(rng.sample(range(1, r), t))
    d = rng.randint(-4, 4)
    members = []
    for k in ranks:
        dj = rng.randint(-4, 4)
        members.append(
            FiltrationMember(
                k,
                Fraction(dj),
                UniPoly.of(dj + k, k),
                random_positive_fraction(rng),
            )
        )
    return FiltrationData(r, Fraction(d), UniPoly.of(d + r, r), tuple(members))


def random_profile(
    rng: random.Random, steps: int, tuple_len: int
) -> NonvanishingProfile:
    """Upward closure of a random tuple set together with the all-top tuple."""
    alphabet = range(1, steps + 2)
    universe = list(itertools.combinations_with_replacement(alphabet, tuple_len))
    seeds = rng.sample(universe, rng.randint(0, min(3, len(universe))))
    seeds.append((steps + 1,) * tuple_len)
    closed = set()
    for seed in seeds:
        ranges = [range(i, steps + 2) for i in seed]
        for cand in itertools.product(*ranges):
            if all(cand[k] <= cand[k + 1] for k in range(tuple_len - 1)):
                closed.add(cand)
    return NonvanishingProfile(steps, tuple_len, frozenset(closed))


def random_rep(rng: random.Random, max_rank: int = 4, max_basis: int = 10):
    r = rng.randint(2, max_rank)
    size = rng.randint(1, max_basis)
    basis = tuple(
        (f"b{i}", tuple(rng.randint(-3, 3) for _ in range(r)))
        for i in range(size)
    )
    rep = TorusWeightRep(r, basis)
    support = rng.sample(range(size), rng.randint(1, size))
    point = RepPoint(
        tuple((f"b{i}", random_positive_fraction(rng)) for i in sorted(support))
    )
    return rep, point
