"""Project configuration: criteria, weights, aggregation choice, and the
evaluation pipeline that turns a parsed dataset into scores.

Config files are YAML with this shape (ranges optional per criterion):

    criteria:
      - {name: Speed, direction: gain, range: [60, 90]}
      - {name: Cost, direction: cost}
    weights: [1.0, 0.5]
    aggregation: {family: elliptic, kind: R, epsilon: 1.0}
    tolerance: 0.0
    rounding_mode: full-precision   # or two-decimal-wmsd
    on_degenerate: error            # or substitute
    degenerate_utility: 0.5

The aggregation mapping accepts the same keys as the HTTP API:
family (classic | elliptic | M | lex), kind (I | A | R), epsilon or
theta, lex (IL | AL | RL | RLpm | XLpm | RL3), p (-1 | 1), force (bool).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np
import yaml

from .aggregations import AggregationSpec, evaluate_grid, theta_to_epsilon
from .errors import (
    DimensionMismatch,
    DomainViolation,
    ParseError,
)
from .lexicographic import LexSpec, lex_tuple
from .model import (
    CriterionSpec,
    DecisionMatrix,
    WeightVector,
    WmsdPoint,
    apply_weights,
    to_utility_space,
    wmsd_many,
)
from .rounding import round_half_away

FULL_PRECISION = "full-precision"
TWO_DECIMAL = "two-decimal-wmsd"

AnySpec = Union[AggregationSpec, LexSpec]


@dataclass(frozen=True)
class ProjectConfig:
    criteria: tuple[CriterionSpec, ...]
    weights: WeightVector
    aggregation: AnySpec | None = None
    tolerance: float = 0.0
    rounding_mode: str = FULL_PRECISION
    on_degenerate: str = "error"
    degenerate_utility: float = 0.5

    def __post_init__(self):
        if len(self.criteria) != len(self.weights):
            raise DimensionMismatch(
                f"{len(self.criteria)} criteria for "
                f"{len(self.weights)} weights")
        if self.rounding_mode not in (FULL_PRECISION, TWO_DECIMAL):
            raise DomainViolation(
                f"rounding_mode must be {FULL_PRECISION!r} or "
                f"{TWO_DECIMAL!r}, got {self.rounding_mode!r}")
        if self.tolerance < 0:
            raise DomainViolation("tolerance must be non-negative")
        if self.aggregation is not None:
            self.aggregation.validate(self.weights)


def spec_from_mapping(d: dict) -> AnySpec:
    """Build an aggregation or lexicographic spec from plain keys.

    Accepts either epsilon or theta (theta wins if both are present,
    matching the UI's bounded slider). family "lex" routes to LexSpec.
    """
    if not isinstance(d, dict):
        raise DomainViolation("aggregation spec must be a mapping")
    family = d.get("family")
    force = bool(d.get("force", False))
    epsilon = d.get("epsilon", 1.0)
    if "theta" in d and d["theta"] is not None:
        epsilon = theta_to_epsilon(float(d["theta"]))
    if family == "lex":
        variant = d.get("lex")
        if variant is None:
            raise DomainViolation("family 'lex' needs a 'lex' variant key")
        return LexSpec(variant=str(variant), p=int(d.get("p", 1)),
                       epsilon=float(epsilon), force=force)
    if family in ("classic", "elliptic", "M"):
        return AggregationSpec(family=family, kind=d.get("kind"),
                               epsilon=float(epsilon), force=force)
    raise DomainViolation(
        "family must be one of classic, elliptic, M, lex; "
        f"got {family!r}")


def _criterion_from_mapping(entry: dict, index: int) -> CriterionSpec:
    if not isinstance(entry, dict) or "name" not in entry:
        raise DomainViolation(
            f"criteria[{index}] must be a mapping with a name")
    lo = hi = None
    rng = entry.get("range")
    if rng is not None:
        if (not isinstance(rng, (list, tuple))) or len(rng) != 2:
            raise DomainViolation(
                f"criteria[{index}]: range must be a [lo, hi] pair")
        lo, hi = float(rng[0]), float(rng[1])
    return CriterionSpec(
        name=str(entry["name"]),
        direction=str(entry.get("direction", "gain")),
        lo=lo, hi=hi)


def config_from_mapping(doc: dict) -> ProjectConfig:
    if not isinstance(doc, dict):
        raise DomainViolation("config must be a mapping")
    raw_criteria = doc.get("criteria")
    if not isinstance(raw_criteria, list) or not raw_criteria:
        raise DomainViolation("config needs a non-empty criteria list")
    criteria = tuple(_criterion_from_mapping(c, i)
                     for i, c in enumerate(raw_criteria))
    weights = doc.get("weights")
    if weights is None:
        weights = [1.0] * len(criteria)
    agg = doc.get("aggregation")
    spec = spec_from_mapping(agg) if agg is not None else None
    if "force_epsilon" in doc and spec is not None:
        force = bool(doc["force_epsilon"])
        if force != spec.force:
            spec = replace(spec, force=force)
    return ProjectConfig(
        criteria=criteria,
        weights=WeightVector(weights),
        aggregation=spec,
        tolerance=float(doc.get("tolerance", 0.0)),
        rounding_mode=str(doc.get("rounding_mode", FULL_PRECISION)),
        on_degenerate=str(doc.get("on_degenerate", "error")),
        degenerate_utility=float(doc.get("degenerate_utility", 0.5)),
    )


def load_config(text: str) -> ProjectConfig:
    """Parse a YAML config document."""
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParseError(f"invalid YAML: {exc}") from exc
    if doc is None:
        raise ParseError("empty config document")
    return config_from_mapping(doc)


def load_config_file(path: str) -> ProjectConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return load_config(fh.read())


@dataclass(frozen=True, eq=False)
class EvaluatedDataset:
    """Everything derived from (dataset, config) up to WMSD points.

    wm/wsd are per alternative, after the config's rounding mode;
    v_rows are the weighted-utility vectors (unrounded).
    """

    ids: tuple[str, ...]
    wm: np.ndarray
    wsd: np.ndarray
    v_rows: np.ndarray
    weights: WeightVector

    def points(self) -> list[WmsdPoint]:
        return [WmsdPoint(float(a), float(b))
                for a, b in zip(self.wm, self.wsd)]


def evaluate_dataset(dm: DecisionMatrix, cfg: ProjectConfig) \
        -> EvaluatedDataset:
    """Dataset -> utilities -> weighted utilities -> WMSD points."""
    if tuple(c.name for c in dm.criteria) != \
            tuple(c.name for c in cfg.criteria):
        raise DimensionMismatch(
            "dataset criteria do not match config criteria")
    u = to_utility_space(dm, on_degenerate=cfg.on_degenerate,
                         degenerate_utility=cfg.degenerate_utility)
    v = apply_weights(u, cfg.weights)
    wm, wsd = wmsd_many(v, cfg.weights)
    if cfg.rounding_mode == TWO_DECIMAL:
        wm = np.array([round_half_away(x, 2) for x in wm])
        wsd = np.array([round_half_away(x, 2) for x in wsd])
    return EvaluatedDataset(ids=dm.ids, wm=wm, wsd=wsd, v_rows=v,
                            weights=cfg.weights)


def score_dataset(ev: EvaluatedDataset, spec: AnySpec) \
        -> list[tuple[str, Union[float, tuple]]]:
    """(id, score) pairs for the given aggregation spec."""
    w = ev.weights
    if isinstance(spec, LexSpec):
        return [
            (ident,
             lex_tuple(spec, (float(ev.wm[i]), float(ev.wsd[i])),
                       ev.v_rows[i], w))
            for i, ident in enumerate(ev.ids)
        ]
    vals = np.asarray(evaluate_grid(spec, ev.wm, ev.wsd, w), dtype=float)
    return [(ident, float(vals[i])) for i, ident in enumerate(ev.ids)]


def mode_scores(ev: EvaluatedDataset, spec: AnySpec, cfg: ProjectConfig) \
        -> list[tuple[str, Union[float, tuple]]]:
    """Scores ready for ranking under the config's evaluation mode.

    In the two-decimal mode scalar scores are rounded to 3 decimals
    (half away from zero) before ranking, so equal printed scores tie.
    """
    scores = score_dataset(ev, spec)
    if cfg.rounding_mode == TWO_DECIMAL and not isinstance(spec, LexSpec):
        scores = [(ident, round_half_away(s, 3)) for ident, s in scores]
    return scores
