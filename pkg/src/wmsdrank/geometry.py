"""Geometry of the attainable (WM, WSD) region.

The weighted-utility vectors live in the box [0, w1] x ... x [0, wn].
Its image in (WM, WSD) coordinates is a curved region between the WM
axis and an upper envelope from (0, 0) to (mean(w), 0). Two exact facts
shape everything here:

  * For a vertex v of the box (every v_j either 0 or w_j), ||v||^2 equals
    v . w, which puts all vertex images on the circle of radius mean(w)/2
    centered at (mean(w)/2, 0). A vertex is fully described by
    s = sum of w_j^2 over its active coordinates:
    WM = mean(w) * s / ||w||^2, WSD = mean(w) * sqrt(s (||w||^2 - s)) / ||w||.
  * At a fixed WM, maximizing WSD means maximizing the convex function
    ||v||^2 over the slice of the box with v . w fixed, so the maximum
    sits at a point with at most one fractional coordinate, i.e. on a
    1-dimensional edge of the box. Sampling all edges therefore carries
    the entire upper envelope.

Isolines of the elliptic aggregations have closed forms in WSD(WM) and
are sampled directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .aggregations import AggregationSpec, evaluate_grid
from .errors import DomainViolation, TooManyCriteria, ValueOutOfRange
from .model import WeightVector, WmsdPoint, _as_point

MAX_CRITERIA = 20
DEDUP_ATOL = 1e-9

# Membership slack: a point this far above the envelope still counts as
# inside, absorbing polyline discretization error.
CONTAINS_ATOL = 1e-9


def _subset_sums_sq(w2: np.ndarray) -> np.ndarray:
    """All subset sums of the squared weights, deduplicated."""
    sums = np.zeros(1)
    for x in w2:
        sums = np.concatenate([sums, sums + x])
        # dedup as we go; keeps uniform-weight cases linear in n.
        # unique-by-key preserves the exact sum values
        keys = np.round(sums / DEDUP_ATOL).astype(np.int64)
        _, idx = np.unique(keys, return_index=True)
        sums = sums[idx]
    return np.sort(sums)


def _vertex_coords(s: np.ndarray, w: WeightVector):
    m = w.mean
    nsq = w.norm_sq
    wm = m * s / nsq
    inner = np.clip(s * (nsq - s), 0.0, None)
    wsd = m * np.sqrt(inner) / nsq
    return wm, wsd


def space_vertices(w: WeightVector) -> list[WmsdPoint]:
    """Images of all 2^n box vertices, deduplicated, sorted by WM.

    First vertex is (0, 0), last is (mean(w), 0).
    """
    n = len(w)
    if n > MAX_CRITERIA:
        raise TooManyCriteria(n, MAX_CRITERIA)
    s = _subset_sums_sq(np.asarray(w.values) ** 2)
    wm, wsd = _vertex_coords(s, w)
    order = np.argsort(wm, kind="stable")
    return [WmsdPoint(float(wm[i]), float(wsd[i])) for i in order]


def _edge_samples(w: WeightVector, samples_per_edge: int):
    """(WM, WSD) samples along the images of all 1-D box edges.

    An edge fixes a subset of coordinates at their weights, zeroes the
    rest, and varies coordinate j in [0, w_j]. Its image depends on the
    fixed part only through s = sum of squared weights over it, so edges
    are enumerated as (j, s) pairs with s ranging over subset sums of
    the other coordinates' squared weights.
    """
    m = w.mean
    nsq = w.norm_sq
    wvals = np.asarray(w.values)
    w2 = wvals ** 2
    t = np.linspace(0.0, 1.0, samples_per_edge)
    out_wm = []
    out_wsd = []
    for j in range(len(w)):
        others = np.delete(w2, j)
        base = _subset_sums_sq(others)           # fixed-part values of s
        wj2 = w2[j]
        # moving point: v . w = s + t * wj^2; ||v||^2 = s + t^2 * wj^2
        dot = base[:, None] + t[None, :] * wj2
        sq = base[:, None] + (t[None, :] ** 2) * wj2
        wm = m * dot / nsq
        inner = np.clip(sq - dot * dot / nsq, 0.0, None)
        wsd = m * np.sqrt(inner) / nsq ** 0.5
        out_wm.append(wm.ravel())
        out_wsd.append(wsd.ravel())
    return np.concatenate(out_wm), np.concatenate(out_wsd)


def boundary_polyline(w: WeightVector, samples_per_edge: int = 512,
                      bins: int = 1024) -> list[WmsdPoint]:
    """Upper envelope of the region as a polyline from (0,0) to (m,0).

    Densely samples every box edge, keeps the maximal WSD per WM bin,
    and closes the curve with the two axis endpoints. Edge samples
    include the box vertices, so envelope apexes are hit exactly.
    """
    n = len(w)
    if n > MAX_CRITERIA:
        raise TooManyCriteria(n, MAX_CRITERIA)
    if samples_per_edge < 2:
        raise DomainViolation("need at least 2 samples per edge")
    m = w.mean
    wm, wsd = _edge_samples(w, samples_per_edge)

    idx = np.clip((wm / m * bins).astype(int), 0, bins - 1)
    best = np.full(bins, -1.0)
    best_wm = np.zeros(bins)
    np.maximum.at(best, idx, wsd)
    # representative WM per bin: the sample that attained the max
    hit = wsd >= best[idx] - 1e-15
    best_wm[idx[hit]] = wm[hit]

    pts = [(0.0, 0.0)]
    for b in range(bins):
        if best[b] < 0:
            continue
        pts.append((float(best_wm[b]), float(best[b])))
    pts.append((m, 0.0))
    # strictly increasing WM for interpolation
    pts.sort()
    out = []
    last = -1.0
    for x, y in pts:
        if x - last < 1e-12:
            if out and y > out[-1][1]:
                out[-1] = (out[-1][0], y)
            continue
        out.append((x, y))
        last = x
    return [WmsdPoint(x, y) for x, y in out]


@dataclass(frozen=True, eq=False)
class SpaceModel:
    """Cached geometry of the attainable region for one weight vector."""

    weights: WeightVector
    vertices: tuple[WmsdPoint, ...]
    boundary: tuple[WmsdPoint, ...]
    _edges: tuple | None = field(default=None, repr=False)

    @classmethod
    def build(cls, w: WeightVector, samples_per_edge: int = 512,
              bins: int = 1024) -> "SpaceModel":
        return cls(
            weights=w,
            vertices=tuple(space_vertices(w)),
            boundary=tuple(boundary_polyline(w, samples_per_edge, bins)),
        )

    @property
    def m(self) -> float:
        return self.weights.mean

    def vertices_array(self) -> np.ndarray:
        return np.array([[p.wm, p.wsd] for p in self.vertices])

    def boundary_array(self) -> np.ndarray:
        return np.array([[p.wm, p.wsd] for p in self.boundary])

    def _edge_set(self) -> tuple:
        if self._edges is None:
            w2 = np.asarray(self.weights.values) ** 2
            pairs = tuple(
                (float(w2[j]), _subset_sums_sq(np.delete(w2, j)))
                for j in range(len(self.weights)))
            object.__setattr__(self, "_edges", pairs)
        return self._edges

    def envelope(self, wm) -> np.ndarray:
        """Exact envelope WSD at the given WM values (0 outside [0, m]).

        Maximizes ||v||^2 over all box edges compatible with the queried
        WM; the sampled boundary polyline is kept for rendering only.
        """
        shape = np.shape(wm)
        q = np.atleast_1d(np.asarray(wm, dtype=float)).ravel()
        m = self.m
        nsq = self.weights.norm_sq
        out = np.empty(q.size)
        for start in range(0, q.size, 1 << 16):
            out[start:start + (1 << 16)] = \
                self._envelope_block(q[start:start + (1 << 16)], m, nsq)
        return out.reshape(shape)

    def _envelope_block(self, q: np.ndarray, m: float,
                        nsq: float) -> np.ndarray:
        dot = q * nsq / m                    # required v . w per query
        best = np.full(q.shape, -np.inf)
        for wj2, base in self._edge_set():
            t = (dot[None, :] - base[:, None]) / wj2
            hit = (t > -1e-9) & (t < 1.0 + 1e-9)
            t = np.clip(t, 0.0, 1.0)
            sq = base[:, None] + t * t * wj2
            cand = np.where(hit, sq, -np.inf).max(axis=0)
            best = np.maximum(best, cand)
        covered = np.isfinite(best)
        wsd_sq = (m * m / nsq) * (best - dot * dot / nsq)
        return np.where(covered,
                        np.sqrt(np.clip(wsd_sq, 0.0, None)), 0.0)

    def contains_many(self, wm, wsd) -> np.ndarray:
        wm = np.asarray(wm, dtype=float)
        wsd = np.asarray(wsd, dtype=float)
        tol = CONTAINS_ATOL * max(1.0, self.m)
        ok_x = (wm >= -tol) & (wm <= self.m + tol)
        ok_y = (wsd >= -tol) & (wsd <= self.envelope(wm) + tol)
        return ok_x & ok_y

    @property
    def wsd_max(self) -> float:
        return float(max(p.wsd for p in self.boundary))


def contains(p, model: SpaceModel) -> bool:
    """Is the point inside the attainable region (within tolerance)?"""
    wm, wsd = _as_point(p)
    return bool(model.contains_many(
        np.array([wm]), np.array([wsd]))[0])


def isoline(kind: str, epsilon: float, value: float, w: WeightVector,
            samples: int = 256) -> list[WmsdPoint]:
    """Sampled level curve WSD(WM) of an elliptic aggregation.

    Closed forms over the WM interval where the radicand is
    non-negative (m = mean(w), non-negative WSD branch only):

        I, level i:  WSD = eps * sqrt((m(1-i))^2 - (m - WM)^2)
        A, level a:  WSD = eps * sqrt((m a)^2 - WM^2)
        R, level r:  WSD = eps * sqrt((WM - m r)(m r - (2r-1) WM)/(2r-1))

    R at level 1/2 degenerates to the vertical segment WM = m/2, which
    is returned as a two-point polyline spanning WSD 0..m/2.
    """
    if not (0.0 < value < 1.0):
        raise ValueOutOfRange(
            f"isoline value must lie in (0, 1), got {value}")
    if not epsilon > 0 or math.isinf(epsilon):
        raise DomainViolation(
            f"isoline needs a finite positive epsilon, got {epsilon}")
    if samples < 2:
        raise DomainViolation("need at least 2 samples")
    m = w.mean

    if kind == "I":
        radius = m * (1.0 - value)
        lo, hi = max(0.0, m - radius), min(m, m + radius)
        wm = np.linspace(lo, hi, samples)
        rad = radius ** 2 - (m - wm) ** 2
    elif kind == "A":
        radius = m * value
        lo, hi = 0.0, min(m, radius)
        wm = np.linspace(lo, hi, samples)
        rad = radius ** 2 - wm ** 2
    elif kind == "R":
        r = value
        if abs(r - 0.5) <= 1e-12:
            return [WmsdPoint(m / 2.0, 0.0), WmsdPoint(m / 2.0, m / 2.0)]
        k = 2.0 * r - 1.0
        # roots of the radicand: WM = m r and WM = m r / (2r - 1)
        if r > 0.5:
            lo, hi = m * r, min(m, m * r / k)
        else:
            lo, hi = max(0.0, m * r / k), m * r
        wm = np.linspace(lo, hi, samples)
        rad = (wm - m * r) * (m * r - k * wm) / k
    else:
        raise DomainViolation(f"unknown aggregation kind {kind!r}")

    wsd = epsilon * np.sqrt(np.clip(rad, 0.0, None))
    return [WmsdPoint(float(x), float(y)) for x, y in zip(wm, wsd)]


@dataclass(frozen=True, eq=False)
class ScalarField:
    """Aggregation values rasterized over a WMSD window.

    values[i, j] is the value at row i (WSD index, bottom row first) and
    column j (WM index); mask marks cells whose center lies inside the
    attainable region. Values are computed for every cell, inside or
    out, so both clipped and unclipped renderings are possible.
    """

    window: tuple[float, float, float, float]
    nx: int
    ny: int
    values: np.ndarray
    mask: np.ndarray

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        wm_lo, wm_hi, wsd_lo, wsd_hi = self.window
        xs = wm_lo + (np.arange(self.nx) + 0.5) * (wm_hi - wm_lo) / self.nx
        ys = wsd_lo + (np.arange(self.ny) + 0.5) * (wsd_hi - wsd_lo) / self.ny
        return xs, ys


def scalar_field(spec: AggregationSpec, w: WeightVector,
                 window: tuple[float, float, float, float] | None = None,
                 resolution: tuple[int, int] = (256, 256),
                 model: SpaceModel | None = None) -> ScalarField:
    """Evaluate an aggregation over a rectangular WMSD window.

    window defaults to the region's bounding box [0, m] x [0, wsd_max].
    resolution is (nx, ny) cells, each at least 16.
    """
    nx, ny = int(resolution[0]), int(resolution[1])
    if nx < 16 or ny < 16:
        raise DomainViolation("field resolution must be at least 16x16")
    if model is None:
        model = SpaceModel.build(w)
    if window is None:
        window = (0.0, model.m, 0.0, model.wsd_max)
    wm_lo, wm_hi, wsd_lo, wsd_hi = (float(x) for x in window)
    if not (wm_lo < wm_hi and wsd_lo < wsd_hi):
        raise DomainViolation("window must have positive extent")

    xs = wm_lo + (np.arange(nx) + 0.5) * (wm_hi - wm_lo) / nx
    ys = wsd_lo + (np.arange(ny) + 0.5) * (wsd_hi - wsd_lo) / ny
    gx, gy = np.meshgrid(xs, ys)            # shape (ny, nx)
    values = np.asarray(evaluate_grid(spec, gx, gy, w), dtype=float)
    mask = model.contains_many(gx.ravel(), gy.ravel()).reshape(gx.shape)
    return ScalarField(window=(wm_lo, wm_hi, wsd_lo, wsd_hi),
                       nx=nx, ny=ny, values=values, mask=mask)
