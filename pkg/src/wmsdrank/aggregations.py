"""Scalar aggregations over (WM, WSD) points.

Three classic TOPSIS-style aggregations, distances taken in WMSD
coordinates (m = mean(w)):

    I = 1 - d_I / m          closeness to the ideal, negated distance
    A = d_A / m              distance from the anti-ideal
    R = d_A / (d_A + d_I)    relative closeness

Their elliptic generalizations I^eps, A^eps, R^eps rescale the WSD axis
by 1/eps before measuring distances, which turns the circular isolines
into ellipses: value(kind, eps, (wm, wsd)) = value(kind, (wm, wsd/eps)).
eps = 1 recovers the classic forms exactly. As eps grows the isolines
straighten toward vertical lines; the limit is the WM-only aggregation M.

For kinds I and A, eps below the operational limit E(w) breaks the
expected behaviour: the minimum (maximum) of the aggregation moves off
the anti-ideal (ideal) corner and dominance compliance of the induced
ranking is lost. epsilon_limit computes E; check_minmax_property probes
a concrete (kind, eps, w) instance numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainViolation,
    EpsilonBelowLimit,
    NonPositiveEpsilon,
    ThetaOutOfRange,
)
from .model import WeightVector, WmsdPoint, _as_point

KINDS = ("I", "A", "R")

#: Marker for "no finite epsilon": elliptic aggregations degenerate to M.
UNBOUNDED = math.inf

# Neighborhood radius (relative to mean(w)) within which an extremum
# counts as sitting at the expected corner of the space.
_CORNER_RTOL = 1e-6


@dataclass(frozen=True)
class AggregationSpec:
    """A scalar aggregation choice.

    family: "classic", "elliptic" or "M". kind applies to classic and
    elliptic. epsilon applies to elliptic (math.inf degenerates to M).
    force skips the epsilon-limit check for elliptic I/A, for use when
    deliberately probing property-violating settings.
    """

    family: str
    kind: str | None = None
    epsilon: float = 1.0
    force: bool = False

    def __post_init__(self):
        if self.family not in ("classic", "elliptic", "M"):
            raise DomainViolation(f"unknown family {self.family!r}")
        if self.family in ("classic", "elliptic"):
            if self.kind not in KINDS:
                raise DomainViolation(
                    f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.family == "elliptic":
            eps = self.epsilon
            if not (isinstance(eps, (int, float)) and
                    (math.isinf(eps) or math.isfinite(eps))):
                raise DomainViolation(f"bad epsilon {eps!r}")
            if not eps > 0:
                raise NonPositiveEpsilon(float(eps))

    def validate(self, w: WeightVector) -> "AggregationSpec":
        """Check epsilon against the operational limit for these weights."""
        if (self.family == "elliptic" and self.kind in ("I", "A")
                and not self.force and math.isfinite(self.epsilon)):
            limit = epsilon_limit(self.kind, w)
            if self.epsilon <= limit:
                raise EpsilonBelowLimit(self.kind, self.epsilon, limit)
        return self

    def below_limit(self, w: WeightVector) -> bool:
        """True when this is an elliptic I/A spec at or below the limit.

        Used to annotate forced results as property-violating.
        """
        return (self.family == "elliptic" and self.kind in ("I", "A")
                and math.isfinite(self.epsilon)
                and self.epsilon <= epsilon_limit(self.kind, w))

    def label(self) -> str:
        if self.family == "M":
            return "M"
        if self.family == "classic":
            return self.kind
        if math.isinf(self.epsilon):
            return f"{self.kind}(eps=inf)"
        return f"{self.kind}(eps={self.epsilon:g})"


def _classic_value(kind: str, wm, wsd, m: float):
    d_i = np.hypot(m - wm, wsd)
    d_a = np.hypot(wm, wsd)
    if kind == "I":
        return 1.0 - d_i / m
    if kind == "A":
        return d_a / m
    if kind == "R":
        denom = d_a + d_i
        # d_a + d_i >= m > 0 everywhere, no guard needed
        return d_a / denom
    raise DomainViolation(f"unknown aggregation kind {kind!r}")


def agg_classic(kind: str, p, w: WeightVector) -> float:
    """Classic aggregation value at a WMSD point."""
    wm, wsd = _as_point(p)
    return float(_classic_value(kind, wm, wsd, w.mean))


def agg_elliptic(kind: str, epsilon: float, p, w: WeightVector) -> float:
    """Elliptic aggregation value at a WMSD point.

    Evaluated as the classic value at (WM, WSD/epsilon). epsilon must be
    positive; math.inf yields the M value (the WM coordinate), keeping
    the infinite-epsilon marker and M interchangeable.
    """
    if not epsilon > 0:
        raise NonPositiveEpsilon(float(epsilon))
    wm, wsd = _as_point(p)
    if math.isinf(epsilon):
        return float(wm)
    return float(_classic_value(kind, wm, wsd / epsilon, w.mean))


def agg_M(p) -> float:
    """WM-only aggregation: ignores WSD entirely."""
    wm, _ = _as_point(p)
    return float(wm)


def evaluate_grid(spec: AggregationSpec, wm, wsd, w: WeightVector):
    """Vectorized aggregation values over arrays of WMSD coordinates."""
    wm = np.asarray(wm, dtype=float)
    wsd = np.asarray(wsd, dtype=float)
    if spec.family == "M":
        return wm + 0.0 * wsd
    if spec.family == "classic":
        return _classic_value(spec.kind, wm, wsd, w.mean)
    if math.isinf(spec.epsilon):
        return wm + 0.0 * wsd
    return _classic_value(spec.kind, wm, wsd / spec.epsilon, w.mean)


def epsilon_limit(kind: str, w: WeightVector) -> float:
    """Operational lower limit E for the elliptic epsilon.

    For kinds I and A the admissible range is (E, +inf): at or below E
    the extremum of the aggregation leaves the corner of the space. For
    kind R every positive epsilon is admissible and the function returns
    UNBOUNDED (math.inf) as the no-limit marker.

    E depends on the weights only through x1, the WM coordinate of the
    vertex generated by the smallest weight alone:
    x1 = mean(w) * min(w)^2 / ||w||^2.
    """
    if kind not in KINDS:
        raise DomainViolation(f"unknown aggregation kind {kind!r}")
    if kind == "R":
        return UNBOUNDED
    m = w.mean
    wmin = float(w.values.min())
    x1 = m * wmin * wmin / w.norm_sq
    num = m * m - (m - 2.0 * x1) ** 2
    den = 4.0 * (m * m - (m - x1) ** 2)
    return math.sqrt(num / den)


def theta_to_epsilon(theta: float) -> float:
    """Map the bounded control theta in (0, 1] to epsilon = theta/(1-theta).

    theta = 1 maps to the UNBOUNDED marker (the M aggregation); theta
    0.5 maps to epsilon 1, the classic case.
    """
    if not (0.0 < theta <= 1.0):
        raise ThetaOutOfRange(float(theta))
    if theta == 1.0:
        return UNBOUNDED
    return theta / (1.0 - theta)


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a max/min location probe over the WMSD-space.

    satisfied means the minimum is attained only at (0, 0) and the
    maximum only at (mean(w), 0); argmin/argmax hold every grid point or
    vertex attaining the extremum (up to a value tie tolerance).
    """

    satisfied: bool
    minimum: float
    maximum: float
    argmin: tuple[WmsdPoint, ...]
    argmax: tuple[WmsdPoint, ...]
    resolution: int


def check_minmax_property(spec: AggregationSpec, w: WeightVector,
                          resolution: int = 256) -> PropertyReport:
    """Probe where spec attains its extremes over the attainable region.

    Evaluates the aggregation on a resolution x resolution grid of the
    region (plus all exact vertices) and reports whether the minimum
    sits only at the anti-ideal image (0,0) and the maximum only at the
    ideal image (mean(w), 0). Elliptic specs with small epsilon violate
    this; the report then carries the offending locations and values.

    The spec is evaluated as-is: epsilon below the operational limit is
    the very case this probe exists for, so no limit check is applied.
    """
    if resolution < 2:
        raise DomainViolation("resolution must be at least 2")
    # geometry imports this module for field evaluation; import lazily
    # to keep module load acyclic
    from .geometry import SpaceModel

    model = SpaceModel.build(w)
    m = w.mean
    verts = model.vertices_array()
    wsd_top = float(verts[:, 1].max())

    xs = np.linspace(0.0, m, resolution)
    ys = np.linspace(0.0, max(wsd_top, 1e-12), resolution)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    inside = model.contains_many(gx.ravel(), gy.ravel()).reshape(gx.shape)

    pts_wm = np.concatenate([gx.ravel()[inside.ravel()], verts[:, 0]])
    pts_wsd = np.concatenate([gy.ravel()[inside.ravel()], verts[:, 1]])
    vals = np.asarray(evaluate_grid(spec, pts_wm, pts_wsd, w), dtype=float)

    vmin = float(vals.min())
    vmax = float(vals.max())
    tie = 1e-12 * max(1.0, abs(vmin), abs(vmax))
    at_min = vals <= vmin + tie
    at_max = vals >= vmax - tie

    radius = _CORNER_RTOL * m
    near_anti = np.hypot(pts_wm, pts_wsd) <= radius
    near_ideal = np.hypot(pts_wm - m, pts_wsd) <= radius
    satisfied = bool(np.all(near_anti[at_min]) and np.all(near_ideal[at_max]))

    def collect(mask) -> tuple[WmsdPoint, ...]:
        idx = np.flatnonzero(mask)
        pts = {(round(float(pts_wm[i]), 12), round(float(pts_wsd[i]), 12))
               for i in idx}
        return tuple(WmsdPoint(a, b) for a, b in sorted(pts))

    return PropertyReport(
        satisfied=satisfied,
        minimum=vmin,
        maximum=vmax,
        argmin=collect(at_min),
        argmax=collect(at_max),
        resolution=resolution,
    )
