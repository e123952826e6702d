"""Bilinear-form bundles on split models over the projective line.

The concrete, fully decidable instances: a split sheaf ⊕O(d_k) with
trivial determinant carries an (anti)symmetric form with polynomial
entries.  Subsheaf flags are given by explicit polynomial generator
matrices; their discrete invariants feed the dispo calculus, where the
form's nonvanishing profile (s = 2, pairs) decides semistability.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from . import _polyalg
from .dispo import (
    FiltrationData,
    FiltrationMember,
    NonvanishingProfile,
    functional_L,
    functional_M,
    mu_profile,
)
from .errors import (
    DegenerateFlag,
    MalformedFlag,
    NotCoordinateFlag,
    TooLarge,
)
from .exactmath import Order, RationalLike, UniPoly, poly_order, rational

EXHAUSTIVE_RANK_CAP = 6


class Symmetry(enum.Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


@dataclass(frozen=True)
class SplitSheafModel:
    """Direct sum of line bundles O(d_k) on the line, trivial determinant."""

    summand_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.summand_degrees)
        if sum(degrees) != 0:
            raise MalformedFlag(f"summand degrees must sum to zero: {degrees}")
        object.__setattr__(self, "summand_degrees", degrees)

    @property
    def rank(self) -> int:
        return len(self.summand_degrees)

    def total_hilb(self) -> UniPoly:
        # Genus zero: P(n) = d_total + r (n + 1), and d_total = 0.
        return UniPoly.of(self.rank, self.rank)

    def dual(self) -> "SplitSheafModel":
        return SplitSheafModel(tuple(-d for d in self.summand_degrees))


@dataclass(frozen=True)
class FormBundle:
    """(Anti)symmetric polynomial form A -> A^dual on a split model."""

    model: SplitSheafModel
    symmetry: Symmetry
    entries: tuple[tuple[UniPoly, ...], ...]

    def __post_init__(self) -> None:
        r = self.model.rank
        if len(self.entries) != r or any(len(row) != r for row in self.entries):
            raise MalformedFlag(f"form matrix must be {r}x{r}")
        sign = 1 if self.symmetry is Symmetry.SYMMETRIC else -1
        degrees = self.model.summand_degrees
        nontrivial = False
        for k in range(r):
            for l in range(r):
                entry = self.entries[k][l]
                bound = -(degrees[k] + degrees[l])
                if not entry.is_zero():
                    nontrivial = True
                    if entry.degree > bound:
                        raise MalformedFlag(
                            f"entry ({k + 1},{l + 1}) has degree {entry.degree}, "
                            f"allowed at most {bound}"
                        )
                mirrored = self.entries[l][k].scale(sign)
                if entry != mirrored:
                    raise MalformedFlag("matrix does not respect the symmetry type")
            if sign == -1 and not self.entries[k][k].is_zero():
                raise MalformedFlag("antisymmetric form must have zero diagonal")
        if not nontrivial:
            raise MalformedFlag("form must be nontrivial")


@dataclass(frozen=True)
class FlagStep:
    """Generator columns (length-r polynomial vectors) and a positive weight."""

    columns: tuple[tuple[UniPoly, ...], ...]
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", rational(self.alpha))
        if self.alpha <= 0:
            raise MalformedFlag("alpha must be positive")
        if not self.columns:
            raise MalformedFlag("a flag step needs at least one generator")


@dataclass(frozen=True)
class SubsheafFlag:
    steps: tuple[FlagStep, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)


def coordinate_flag(
    chain: Sequence[Sequence[int]],
    alphas: Optional[Sequence[RationalLike]] = None,
    r: Optional[int] = None,
) -> SubsheafFlag:
    """Flag whose steps are spans of standard basis vectors (1-based indices)."""
    if alphas is None:
        alphas = [1] * len(chain)
    if r is None:
        r = max((max(s) for s in chain if s), default=0)
    steps = []
    for subset, alpha in zip(chain, alphas):
        columns = []
        for k in sorted(subset):
            column = tuple(
                UniPoly.of(1) if a == k else UniPoly.zero() for a in range(1, r + 1)
            )
            columns.append(column)
        steps.append(FlagStep(tuple(columns), rational(alpha)))
    return SubsheafFlag(tuple(steps))


def _step_matrix(step: FlagStep, r: int) -> list[list[UniPoly]]:
    for column in step.columns:
        if len(column) != r:
            raise MalformedFlag(
                f"generator column has length {len(column)}, expected {r}"
            )
    return [[column[a] for column in step.columns] for a in range(r)]


@lru_cache(maxsize=4096)
def _flag_ranks(model: SplitSheafModel, flag: SubsheafFlag) -> tuple[int, ...]:
    r = model.rank
    ranks: list[int] = []
    previous_columns: tuple = ()
    for step in flag.steps:
        matrix = _step_matrix(step, r)
        rank = _polyalg.generic_rank(matrix)
        if ranks and rank <= ranks[-1]:
            raise DegenerateFlag(
                f"generic ranks collapse: {ranks + [rank]} not strictly increasing"
            )
        if not 0 < rank < r:
            raise DegenerateFlag(
                f"step rank {rank} must lie strictly between 0 and {r}"
            )
        if previous_columns:
            joint = [[col[a] for col in previous_columns + step.columns] for a in range(r)]
            if _polyalg.generic_rank(joint) != rank:
                raise MalformedFlag("flag steps are not nested")
        previous_columns = previous_columns + step.columns
        ranks.append(rank)
    return tuple(ranks)


@lru_cache(maxsize=4096)
def saturation_degree(model: SplitSheafModel, step: FlagStep) -> int:
    """Degree of the saturation of the subsheaf generated by the columns.

    Computed from the primitive vector of maximal minors: with the
    polynomial content g removed, the degree is the minimum over row
    subsets S of (sum of summand degrees over S) minus deg of the
    reduced minor.
    """
    r = model.rank
    matrix = _step_matrix(step, r)
    m = _polyalg.generic_rank(matrix)
    if m == 0:
        raise DegenerateFlag("generator matrix has generic rank zero")
    if m < len(step.columns):
        # Drop dependent columns so the minors are those of a basis.
        kept: list[tuple[UniPoly, ...]] = []
        for column in step.columns:
            trial = kept + [column]
            trial_matrix = [[col[a] for col in trial] for a in range(r)]
            if _polyalg.generic_rank(trial_matrix) == len(trial):
                kept = trial
        matrix = [[col[a] for col in kept] for a in range(r)]
    minors = _polyalg.maximal_minors(matrix, m)
    content = _polyalg.poly_content(list(minors.values()))
    best = None
    for subset, minor in minors.items():
        if minor.is_zero():
            continue
        twist = sum(model.summand_degrees[a] for a in subset)
        value = twist - (minor.degree - content.degree)
        if best is None or value < best:
            best = value
    if best is None:
        raise DegenerateFlag("generator matrix has generic rank zero")
    return best


def filtration_data_of(fb: FormBundle, flag: SubsheafFlag) -> FiltrationData:
    """Discrete invariants (rank, degree, Hilbert polynomial, alpha) per step."""
    model = fb.model
    ranks = _flag_ranks(model, flag)
    members = []
    for step, rank in zip(flag.steps, ranks):
        degree = saturation_degree(model, step)
        hilb = UniPoly.of(degree + rank, rank)
        members.append(
            FiltrationMember(rank, Fraction(degree), hilb, step.alpha)
        )
    return FiltrationData(
        model.rank, Fraction(0), model.total_hilb(), tuple(members)
    )


def form_profile(fb: FormBundle, flag: SubsheafFlag) -> NonvanishingProfile:
    """Which pairs of flag blocks the form does not vanish on (s = 2)."""
    r = fb.model.rank
    _flag_ranks(fb.model, flag)
    t = flag.step_count
    matrices = [_step_matrix(step, r) for step in flag.steps]
    identity = [
        [UniPoly.of(1) if a == b else UniPoly.zero() for b in range(r)]
        for a in range(r)
    ]
    matrices.append(identity)
    tuples = set()
    for i in range(1, t + 2):
        for j in range(i, t + 2):
            if not _block_vanishes(fb.entries, matrices[i - 1], matrices[j - 1]):
                tuples.add((i, j))
    return NonvanishingProfile(t, 2, frozenset(tuples))


def _block_vanishes(entries, left, right) -> bool:
    """Whether G_left^T Phi G_right is identically zero."""
    r = len(entries)
    phi_right_cols = []
    for col in range(len(right[0])):
        out = []
        for a in range(r):
            acc = UniPoly.zero()
            for b in range(r):
                acc = acc + entries[a][b] * right[b][col]
            out.append(acc)
        phi_right_cols.append(out)
    for lcol in range(len(left[0])):
        for rcol in range(len(right[0])):
            acc = UniPoly.zero()
            for a in range(r):
                acc = acc + left[a][lcol] * phi_right_cols[rcol][a]
            if not acc.is_zero():
                return False
    return True


def kernel_destabilizer(fb: FormBundle) -> Optional[SubsheafFlag]:
    """Kernel flag with alpha = (1), or None if generically nondegenerate."""
    kernel = _polyalg.generic_kernel(fb.entries)
    if not kernel:
        return None
    columns = tuple(tuple(column) for column in kernel)
    return SubsheafFlag((FlagStep(columns, Fraction(1)),))


FlagSource = Union[str, Sequence[SubsheafFlag]]

EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class FormVerdict:
    semistable: bool
    witness: Optional[SubsheafFlag] = None


def enumerate_coordinate_flags(r: int) -> list[SubsheafFlag]:
    """All chains of nonempty proper coordinate subsets, alphas fixed to 1."""
    return list(_coordinate_flags_cached(r))


@lru_cache(maxsize=16)
def _coordinate_flags_cached(r: int) -> tuple[SubsheafFlag, ...]:
    subsets = []
    for size in range(1, r):
        for combo in combinations(range(1, r + 1), size):
            subsets.append(frozenset(combo))
    flags = []

    def extend(chain: list[frozenset]) -> None:
        if chain:
            flags.append(
                coordinate_flag([sorted(s) for s in chain], r=r)
            )
        start = subsets.index(chain[-1]) + 1 if chain else 0
        for s in subsets[start:]:
            if not chain or (chain[-1] < s):
                extend(chain + [s])

    extend([])
    return tuple(flags)


def _gather_flags(fb: FormBundle, flag_source: FlagSource) -> list[SubsheafFlag]:
    if isinstance(flag_source, str):
        if flag_source != EXHAUSTIVE:
            raise MalformedFlag(f"unknown flag source {flag_source!r}")
        if fb.model.rank > EXHAUSTIVE_RANK_CAP:
            raise TooLarge(
                f"exhaustive enumeration capped at rank {EXHAUSTIVE_RANK_CAP}"
            )
        flags = enumerate_coordinate_flags(fb.model.rank)
    else:
        flags = list(flag_source)
    kernel = kernel_destabilizer(fb)
    if kernel is not None:
        flags = [kernel] + flags
    return flags


def semistable_form(
    fb: FormBundle, flag_source: FlagSource = EXHAUSTIVE, strict: bool = False
) -> FormVerdict:
    """Asymptotic semistability over the gathered flag set (kernel injected)."""
    for flag in _gather_flags(fb, flag_source):
        data = filtration_data_of(fb, flag)
        profile = form_profile(fb, flag)
        value = mu_profile(data, profile)
        if value < 0:
            return FormVerdict(False, flag)
        if value == 0:
            order = poly_order(functional_M(data), UniPoly.zero())
            if order is Order.LESS or (strict and order is Order.EQUAL):
                return FormVerdict(False, flag)
    return FormVerdict(True)


def ramanathan_semistable(
    fb: FormBundle, flag_source: FlagSource = EXHAUSTIVE, strict: bool = False
) -> FormVerdict:
    """L (>=) 0 over every gathered flag whose mu vanishes."""
    for flag in _gather_flags(fb, flag_source):
        data = filtration_data_of(fb, flag)
        profile = form_profile(fb, flag)
        if mu_profile(data, profile) != 0:
            continue
        value = functional_L(data)
        if value < 0 or (strict and value == 0):
            return FormVerdict(False, flag)
    return FormVerdict(True)


def _coordinate_sets(flag: SubsheafFlag, r: int) -> list[frozenset[int]]:
    sets = []
    for step in flag.steps:
        indices = set()
        for column in step.columns:
            if len(column) != r:
                raise NotCoordinateFlag("generator column has the wrong length")
            hits = [
                a + 1
                for a, p in enumerate(column)
                if not p.is_zero()
            ]
            if len(hits) != 1 or column[hits[0] - 1] != UniPoly.of(1):
                raise NotCoordinateFlag(
                    "generators must be standard basis vectors"
                )
            indices.add(hits[0])
        sets.append(frozenset(indices))
    return sets


def dualize_filtration(model: SplitSheafModel, flag: SubsheafFlag) -> SubsheafFlag:
    """Dual flag (kernels of restriction maps) on the dual split model.

    Coordinate flags only: step i of the result is the complement of step
    t + 1 - i, with the weights reversed.  An involution; preserves the L
    functional when the total degree is zero.
    """
    r = model.rank
    sets = _coordinate_sets(flag, r)
    everything = frozenset(range(1, r + 1))
    alphas = [step.alpha for step in flag.steps]
    chain = [sorted(everything - s) for s in reversed(sets)]
    return coordinate_flag(chain, list(reversed(alphas)), r=r)
