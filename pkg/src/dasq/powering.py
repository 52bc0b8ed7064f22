"""Matrix-power trajectories: per-power classification and spectral
records, constancy detection, and the odd/even alternation verdict.

A trajectory stops as soon as a power is a constant matrix, because a
constant matrix times a doubly-affine square is again constant: all
later steps are implied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import ClassificationFlags, classify, line_sums
from .core import IntSquare, SquareError, is_constant, mat_mul, rank
from .spectra import compression, r_index, spread

DEFAULT_MAX_P = 12


@dataclass(frozen=True)
class PowerStepRecord:
    p: int
    rank: int
    type_label: str  # constant | DDA | DA | none
    d1: int
    d2: int
    linesum: int | None
    compression_pct: float | None
    spread: Fraction | None
    r_index: int | None
    constant_value: int | None


@dataclass(frozen=True)
class PowerTrajectory:
    base: IntSquare
    steps: tuple[PowerStepRecord, ...]
    constancy_onset: int | None
    truncated_at: int | None

    def step(self, p: int) -> PowerStepRecord:
        return self.steps[p - 1]


def _record(p: int, a: IntSquare, flags: ClassificationFlags) -> PowerStepRecord:
    report = line_sums(a)
    nonneg_da = flags.is_DA and all(v >= 0 for v in a.entries)
    spread_val = None
    if flags.is_DA and flags.linesum:
        spread_val = spread(a)
    try:
        comp = compression(a)
    except SquareError:  # zero square
        comp = None
    return PowerStepRecord(
        p=p,
        rank=rank(a),
        type_label=flags.type_label,
        d1=report.d1,
        d2=report.d2,
        linesum=flags.linesum,
        compression_pct=comp,
        spread=spread_val,
        r_index=r_index(a) if nonneg_da else None,
        constant_value=is_constant(a),
    )


def trajectory(a: IntSquare, max_p: int = DEFAULT_MAX_P) -> PowerTrajectory:
    """Records for A^p, p = 1..max_p, stopping early at constancy."""
    if max_p < 1:
        raise SquareError("max_p must be >= 1")
    steps = []
    onset = None
    power = a
    for p in range(1, max_p + 1):
        if p > 1:
            power = mat_mul(power, a)
        flags = classify(power)
        steps.append(_record(p, power, flags))
        if steps[-1].constant_value is not None:
            onset = p
            break
    return PowerTrajectory(
        base=a,
        steps=tuple(steps),
        constancy_onset=onset,
        truncated_at=None if onset is not None else max_p,
    )


def constancy_onset(a: IntSquare, max_p: int = DEFAULT_MAX_P) -> int | None:
    """Smallest p <= max_p with A^p constant, else None.

    Cheaper than a full trajectory: only multiplies and tests entries.
    """
    if max_p < 1:
        raise SquareError("max_p must be >= 1")
    power = a
    for p in range(1, max_p + 1):
        if p > 1:
            power = mat_mul(power, a)
        if is_constant(power) is not None:
            return p
    return None


def cbh_alternation_check(t: PowerTrajectory) -> str:
    """Classify the odd/even pattern of a trajectory.

    Returns one of:
      * ``constant-at(p)``  -- some power is a constant matrix,
      * ``all-DDA``         -- every recorded power keeps both diagonals,
      * ``alternates``      -- odd powers DDA, even powers DA but not DDA,
      * ``other``           -- anything else.
    """
    if len(t.steps) < 2:
        raise SquareError("alternation verdict needs at least 2 steps")
    if t.constancy_onset is not None:
        return f"constant-at({t.constancy_onset})"
    labels = [s.type_label for s in t.steps]
    if all(lab == "DDA" for lab in labels):
        return "all-DDA"
    odd_dda = all(lab == "DDA" for p, lab in enumerate(labels, 1) if p % 2 == 1)
    even_da = all(lab == "DA" for p, lab in enumerate(labels, 1) if p % 2 == 0)
    if odd_dda and even_da:
        return "alternates"
    return "other"
