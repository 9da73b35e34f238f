"""Multi-criteria ranking with TOPSIS-style aggregations expressed in
WM/WSD (weight-scaled mean / weight-scaled standard deviation)
coordinates: classic, elliptic and lexicographic aggregation families,
geometry of the attainable WMSD region, and CLI/HTTP front ends.
"""

from .aggregations import (
    AggregationSpec,
    PropertyReport,
    UNBOUNDED,
    agg_M,
    agg_classic,
    agg_elliptic,
    check_minmax_property,
    epsilon_limit,
    theta_to_epsilon,
)
from .config import (
    ProjectConfig,
    evaluate_dataset,
    load_config,
    load_config_file,
    mode_scores,
    score_dataset,
    spec_from_mapping,
)
from .dataio import emit_dataset_csv, parse_dataset
from .errors import (
    DegenerateRange,
    DimensionMismatch,
    DomainViolation,
    EpsilonBelowLimit,
    HeaderMismatch,
    LengthMismatch,
    MixedScoreKinds,
    NonPositiveEpsilon,
    ParseError,
    ThetaOutOfRange,
    TooManyCriteria,
    ValidationError,
    ValueOutOfRange,
    WmsdrankError,
)
from .geometry import (
    ScalarField,
    SpaceModel,
    boundary_polyline,
    contains,
    isoline,
    scalar_field,
    space_vertices,
)
from .lexicographic import (
    EQUAL,
    GREATER,
    LESS,
    LexSpec,
    lex_compare,
    lex_tuple,
)
from .model import (
    CriterionSpec,
    DecisionMatrix,
    WeightVector,
    WmsdPoint,
    apply_weights,
    dist_to_reference,
    minmax_utility,
    to_utility_space,
    wmsd_many,
    wmsd_of,
)
from .ranking import RankedEntry, rank
from .reports import emit_ranking_report
from .rounding import round_half_away
from .svgplot import emit_svg

__version__ = "0.1.0"

__all__ = [
    "AggregationSpec",
    "CriterionSpec",
    "DecisionMatrix",
    "DegenerateRange",
    "DimensionMismatch",
    "DomainViolation",
    "EQUAL",
    "EpsilonBelowLimit",
    "GREATER",
    "HeaderMismatch",
    "LESS",
    "LengthMismatch",
    "LexSpec",
    "MixedScoreKinds",
    "NonPositiveEpsilon",
    "ParseError",
    "ProjectConfig",
    "PropertyReport",
    "RankedEntry",
    "ScalarField",
    "SpaceModel",
    "ThetaOutOfRange",
    "TooManyCriteria",
    "UNBOUNDED",
    "ValidationError",
    "ValueOutOfRange",
    "WeightVector",
    "WmsdPoint",
    "WmsdrankError",
    "agg_M",
    "agg_classic",
    "agg_elliptic",
    "apply_weights",
    "boundary_polyline",
    "check_minmax_property",
    "contains",
    "dist_to_reference",
    "emit_dataset_csv",
    "emit_ranking_report",
    "emit_svg",
    "epsilon_limit",
    "evaluate_dataset",
    "isoline",
    "lex_compare",
    "lex_tuple",
    "load_config",
    "load_config_file",
    "minmax_utility",
    "mode_scores",
    "parse_dataset",
    "rank",
    "round_half_away",
    "scalar_field",
    "score_dataset",
    "space_vertices",
    "spec_from_mapping",
    "to_utility_space",
    "wmsd_many",
    "wmsd_of",
]
