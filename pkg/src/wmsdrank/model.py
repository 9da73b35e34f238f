"""Core decision model: criterion space, utility space, weighted utilities,
and the two-coordinate summary (WM, WSD) every aggregation works on.

Pipeline: raw criterion values -> min-max utilities in [0,1] -> weighted
utilities v (v_j = u_j * w_j, so the anti-ideal is 0 and the ideal is w)
-> the point (WM, WSD).

WM is the weight-scaled mean and WSD the weight-scaled standard deviation:

    WM  = mean(w) * (v . w) / ||w||^2
    WSD = (mean(w) / ||w||) * ||v - ((v . w) / ||w||^2) * w||

For uniform weights these are the arithmetic mean and the population
standard deviation of v. Their defining contract is the pair of distance
identities (m = mean(w)):

    sqrt(WM^2 + WSD^2)       = m * ||v||     / ||w||   (distance to anti-ideal)
    sqrt((m - WM)^2 + WSD^2) = m * ||v - w|| / ||w||   (distance to ideal)

so rankings computed in (WM, WSD) coordinates agree with rankings computed
from Euclidean distances in the weighted-utility space.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateRange,
    DimensionMismatch,
    DomainViolation,
)

GAIN = "gain"
COST = "cost"

# Slack, in units of max(w), allowed when checking that v stays inside
# the [0, w] box; guards against accumulated float error only.
BOX_ATOL = 1e-9


@dataclass(frozen=True)
class CriterionSpec:
    """One column of the decision matrix.

    direction is "gain" (higher raw value is better) or "cost" (lower is
    better). lo/hi, when given, fix the min-max range explicitly;
    otherwise the range is taken from the loaded data.
    """

    name: str
    direction: str
    lo: float | None = None
    hi: float | None = None

    def __post_init__(self):
        if self.direction not in (GAIN, COST):
            raise DomainViolation(
                f"criterion {self.name!r}: direction must be "
                f"'gain' or 'cost', got {self.direction!r}"
            )
        if (self.lo is None) != (self.hi is None):
            raise DomainViolation(
                f"criterion {self.name!r}: lo and hi must be given together"
            )

    @property
    def has_range(self) -> bool:
        return self.lo is not None


@dataclass(frozen=True, eq=False)
class WeightVector:
    values: np.ndarray

    def __init__(self, values: Iterable[float]):
        arr = np.array(
            list(values) if not isinstance(values, np.ndarray) else values,
            dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise DimensionMismatch("weights must be a non-empty 1-D vector")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
            raise DomainViolation("weights must be finite and positive")
        object.__setattr__(self, "values", arr)
        arr.setflags(write=False)

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self):
        return iter(self.values.tolist())

    @property
    def mean(self) -> float:
        return float(self.values.mean())

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    @property
    def norm_sq(self) -> float:
        return float(self.values @ self.values)


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """Alternatives (rows) by criteria (columns), raw criterion values."""

    ids: tuple[str, ...]
    values: np.ndarray
    criteria: tuple[CriterionSpec, ...]

    def __init__(self, ids: Sequence[str], values, criteria:
                 Sequence[CriterionSpec]):
        arr = np.array(values, dtype=float)
        if arr.ndim != 2:
            raise DimensionMismatch("decision matrix must be 2-D")
        if arr.shape[0] != len(ids):
            raise DimensionMismatch(
                f"{len(ids)} ids for {arr.shape[0]} rows"
            )
        if arr.shape[1] != len(criteria):
            raise DimensionMismatch(
                f"{len(criteria)} criteria for {arr.shape[1]} columns"
            )
        if len(set(ids)) != len(ids):
            raise DomainViolation("alternative ids must be unique")
        object.__setattr__(self, "ids", tuple(ids))
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "criteria", tuple(criteria))
        arr.setflags(write=False)

    @property
    def n_alternatives(self) -> int:
        return self.values.shape[0]

    @property
    def n_criteria(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class WmsdPoint:
    wm: float
    wsd: float

    def __iter__(self):
        yield self.wm
        yield self.wsd

    def as_tuple(self) -> tuple[float, float]:
        return (self.wm, self.wsd)


def _as_point(p) -> tuple[float, float]:
    if isinstance(p, WmsdPoint):
        return p.wm, p.wsd
    wm, wsd = p
    return float(wm), float(wsd)


def minmax_utility(x: float, spec: CriterionSpec,
                   data_lo: float | None = None,
                   data_hi: float | None = None) -> float:
    """Min-max utility of a single raw value.

    The effective range is spec.(lo, hi) when present, else
    (data_lo, data_hi). Values outside an explicit range are clamped
    with a warning; a collapsed range raises DegenerateRange.
    """
    if spec.has_range:
        lo, hi = float(spec.lo), float(spec.hi)
    else:
        if data_lo is None or data_hi is None:
            raise DegenerateRange(spec.name, float("nan"), float("nan"))
        lo, hi = float(data_lo), float(data_hi)
    if not (lo < hi):
        raise DegenerateRange(spec.name, lo, hi)
    if x < lo or x > hi:
        warnings.warn(
            f"criterion {spec.name!r}: value {x} outside [{lo}, {hi}], "
            "clamped", stacklevel=2)
        x = min(max(x, lo), hi)
    u = (x - lo) / (hi - lo)
    if spec.direction == COST:
        u = 1.0 - u
    return u


def to_utility_space(dm: DecisionMatrix, *, on_degenerate: str = "error",
                     degenerate_utility: float = 0.5) -> np.ndarray:
    """Transform a whole decision matrix to utilities in [0,1].

    Data-driven ranges use the per-column min/max of dm. A constant
    column without an explicit range raises DegenerateRange, unless
    on_degenerate="substitute", which fills the column with
    degenerate_utility instead.
    """
    if on_degenerate not in ("error", "substitute"):
        raise DomainViolation(
            f"on_degenerate must be 'error' or 'substitute', "
            f"got {on_degenerate!r}")
    out = np.empty_like(dm.values)
    for j, spec in enumerate(dm.criteria):
        col = dm.values[:, j]
        if spec.has_range:
            lo, hi = float(spec.lo), float(spec.hi)
        else:
            lo, hi = float(col.min()), float(col.max())
        if not (lo < hi):
            if spec.has_range or on_degenerate == "error":
                raise DegenerateRange(spec.name, lo, hi)
            out[:, j] = degenerate_utility
            continue
        clipped = np.clip(col, lo, hi)
        if not np.array_equal(clipped, col):
            warnings.warn(
                f"criterion {spec.name!r}: values outside [{lo}, {hi}] "
                "clamped", stacklevel=2)
        u = (clipped - lo) / (hi - lo)
        if spec.direction == COST:
            u = 1.0 - u
        out[:, j] = u
    return out


def apply_weights(u: np.ndarray, w: WeightVector) -> np.ndarray:
    """Rescale utilities column-wise by the weights (v_ij = u_ij * w_j)."""
    u = np.asarray(u, dtype=float)
    cols = u.shape[-1]
    if cols != len(w):
        raise DimensionMismatch(
            f"utility matrix has {cols} columns, weights have {len(w)}")
    if u.min(initial=0.0) < -BOX_ATOL or u.max(initial=1.0) > 1.0 + BOX_ATOL:
        raise DomainViolation("utilities must lie in [0, 1]")
    return u * w.values


def _check_box(v: np.ndarray, w: WeightVector) -> None:
    atol = BOX_ATOL * max(1.0, float(w.values.max()))
    if (v < -atol).any() or (v > w.values + atol).any():
        raise DomainViolation(
            "weighted utilities must lie in the [0, w] box")


def wmsd_many(v: np.ndarray, w: WeightVector) -> tuple[np.ndarray, np.ndarray]:
    """(WM, WSD) for each row of v. Rows outside [0, w] raise."""
    v = np.atleast_2d(np.asarray(v, dtype=float))
    if v.shape[1] != len(w):
        raise DimensionMismatch(
            f"vectors of length {v.shape[1]} against {len(w)} weights")
    _check_box(v, w)
    m = w.mean
    nsq = w.norm_sq
    # row-wise pairwise sum, not BLAS matvec: keeps single-row calls
    # bit-identical to batched ones
    t = (v * w.values).sum(axis=1) / nsq
    wm = m * t
    resid = v - t[:, None] * w.values
    wsd = (m / w.norm) * np.linalg.norm(resid, axis=1)
    return wm, wsd


def wmsd_of(v, w: WeightVector) -> WmsdPoint:
    """(WM, WSD) of a single weighted-utility vector."""
    wm, wsd = wmsd_many(np.asarray(v, dtype=float).reshape(1, -1), w)
    return WmsdPoint(float(wm[0]), float(wsd[0]))


def dist_to_reference(p, w: WeightVector) -> tuple[float, float]:
    """Distances (d_I, d_A) of a WMSD point to the ideal and anti-ideal.

    d_I = sqrt((mean(w) - WM)^2 + WSD^2), d_A = sqrt(WM^2 + WSD^2).
    Equal to the Euclidean distances ||v - w|| and ||v|| in the weighted
    utility space, rescaled by mean(w)/||w||.
    """
    wm, wsd = _as_point(p)
    m = w.mean
    d_i = float(np.hypot(m - wm, wsd))
    d_a = float(np.hypot(wm, wsd))
    return d_i, d_a
