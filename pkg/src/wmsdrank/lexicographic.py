"""Lexicographic aggregations: score tuples compared component by
component, WM always first.

Variants (m = mean(w), midpoint = m/2):

    IL   (WM, -WSD)            imitates I: at equal WM, less spread wins
    AL   (WM, +WSD)            imitates A: at equal WM, more spread wins
    RL   (WM, z)               imitates R: z = +WSD below the midpoint,
                               0 at it, -WSD above it
    RLpm (WM, z)               RL with a sign parameter p in {-1, +1};
                               z = +p*WSD below, 0 at, -p*WSD above,
                               so p=+1 is exactly RL and p=-1 swaps the
                               role of WSD on both sides
    XLpm (first, second)       the pair (I^eps, A^eps); p=+1 exchanges
                               the component order to (A^eps, I^eps)
    RL3  (WM, max(v), -min(v)) imitates M, breaking ties by the best
                               then the worst weighted utility

Tuples order descending; ties on the first component fall through to
the next one, so WSD influences the ranking only when WM values tie.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .aggregations import agg_elliptic, epsilon_limit
from .errors import (
    DomainViolation,
    EpsilonBelowLimit,
    LengthMismatch,
    NonPositiveEpsilon,
)
from .model import WeightVector, _as_point

VARIANTS = ("IL", "AL", "RL", "RLpm", "XLpm", "RL3")

GREATER = 1
EQUAL = 0
LESS = -1

# Two WM values within this of the midpoint count as exactly midline.
MIDPOINT_ATOL = 1e-9


@dataclass(frozen=True)
class LexSpec:
    """A lexicographic aggregation choice.

    p applies to RLpm and XLpm; epsilon and force apply to XLpm, whose
    components are elliptic I/A values and follow their validation.
    """

    variant: str
    p: int = 1
    epsilon: float = 1.0
    force: bool = False

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise DomainViolation(
                f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.variant in ("RLpm", "XLpm") and self.p not in (-1, 1):
            raise DomainViolation(f"p must be -1 or +1, got {self.p!r}")
        if self.variant == "XLpm" and not self.epsilon > 0:
            raise NonPositiveEpsilon(float(self.epsilon))

    def validate(self, w: WeightVector) -> "LexSpec":
        if (self.variant == "XLpm" and not self.force
                and math.isfinite(self.epsilon)):
            # both components are elliptic I/A; the I/A limit is shared
            limit = epsilon_limit("I", w)
            if self.epsilon <= limit:
                raise EpsilonBelowLimit("XLpm", self.epsilon, limit)
        return self

    @property
    def dimensionality(self) -> int:
        return 3 if self.variant == "RL3" else 2

    def label(self) -> str:
        if self.variant in ("RLpm", "XLpm"):
            sign = "+1" if self.p > 0 else "-1"
            if self.variant == "XLpm":
                return f"XLpm(p={sign}, eps={self.epsilon:g})"
            return f"RLpm(p={sign})"
        return self.variant


def _midline_side(wm: float, m: float) -> int:
    """-1 below the midpoint, 0 on it, +1 above it."""
    mid = m / 2.0
    if abs(wm - mid) <= MIDPOINT_ATOL:
        return 0
    return -1 if wm < mid else 1


def lex_tuple(spec: LexSpec, p, v, w: WeightVector) -> tuple[float, ...]:
    """Score tuple for one alternative.

    p is the alternative's WMSD point and v its weighted-utility vector
    (v is consulted only by RL3 but always accepted, so callers can
    treat every variant uniformly).
    """
    wm, wsd = _as_point(p)
    m = w.mean
    if spec.variant == "IL":
        return (wm, -wsd)
    if spec.variant == "AL":
        return (wm, wsd)
    if spec.variant == "RL":
        side = _midline_side(wm, m)
        return (wm, -side * wsd)
    if spec.variant == "RLpm":
        side = _midline_side(wm, m)
        return (wm, -side * spec.p * wsd)
    if spec.variant == "XLpm":
        vi = agg_elliptic("I", spec.epsilon, (wm, wsd), w)
        va = agg_elliptic("A", spec.epsilon, (wm, wsd), w)
        return (va, vi) if spec.p > 0 else (vi, va)
    if spec.variant == "RL3":
        if v is None:
            raise DomainViolation("RL3 needs the weighted-utility vector")
        arr = np.asarray(v, dtype=float)
        if arr.ndim != 1 or arr.size != len(w):
            raise LengthMismatch(
                f"vector of length {arr.size} against {len(w)} weights")
        return (wm, float(arr.max()), -float(arr.min()))
    raise DomainViolation(f"unknown variant {spec.variant!r}")


def lex_compare(t1, t2, tolerance: float = 0.0) -> int:
    """Lexicographic comparison: GREATER, EQUAL or LESS.

    Earlier components dominate; components within tolerance of each
    other count as equal and defer to the next one.
    """
    t1 = tuple(t1)
    t2 = tuple(t2)
    if len(t1) != len(t2):
        raise LengthMismatch(
            f"cannot compare tuples of lengths {len(t1)} and {len(t2)}")
    for a, b in zip(t1, t2):
        if abs(a - b) <= tolerance:
            continue
        return GREATER if a > b else LESS
    return EQUAL
