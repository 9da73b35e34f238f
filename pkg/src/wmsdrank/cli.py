"""Command-line interface.

Subcommands: rank, wmsd, epsilon-limit, isolines, field, check-property,
compare, serve. Exit codes: 0 success, 2 validation error, 3 parse error.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys

from .aggregations import (
    AggregationSpec,
    KINDS,
    check_minmax_property,
    epsilon_limit,
    theta_to_epsilon,
)
from .config import (
    ProjectConfig,
    evaluate_dataset,
    load_config_file,
    mode_scores as _mode_scores,
)
from .dataio import parse_dataset
from .errors import (
    DomainViolation,
    ParseError,
    ValidationError,
    WmsdrankError,
)
from .geometry import SpaceModel, isoline, scalar_field
from .lexicographic import VARIANTS as LEX_VARIANTS
from .lexicographic import LexSpec
from .ranking import rank as rank_scores
from .reports import emit_ranking_report
from .svgplot import emit_svg

AGG_CHOICES = list(KINDS) + ["M"] + list(LEX_VARIANTS)

_FORMAT_MAP = {"table": "table-text", "csv": "csv", "jsonl": "json-lines"}


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_config(path: str) -> ProjectConfig:
    try:
        return load_config_file(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _build_spec(args, cfg: ProjectConfig):
    """Aggregation choice from flags, falling back to the config."""
    name = getattr(args, "agg", None)
    if name is None:
        if cfg.aggregation is None:
            raise DomainViolation(
                "no aggregation: pass --agg or set one in the config")
        return cfg.aggregation
    epsilon = getattr(args, "epsilon", None)
    theta = getattr(args, "theta", None)
    force = bool(getattr(args, "force_epsilon", False))
    if theta is not None:
        epsilon = theta_to_epsilon(theta)
    if name in KINDS:
        if epsilon is None:
            spec = AggregationSpec(family="classic", kind=name, force=force)
        else:
            spec = AggregationSpec(family="elliptic", kind=name,
                                   epsilon=float(epsilon), force=force)
    elif name == "M":
        spec = AggregationSpec(family="M", force=force)
    else:
        p = int(getattr(args, "p", 1) or 1)
        spec = LexSpec(variant=name, p=p,
                       epsilon=float(epsilon) if epsilon is not None else 1.0,
                       force=force)
    spec.validate(cfg.weights)
    return spec


def _cmd_rank(args) -> int:
    cfg = _load_config(args.config)
    spec = _build_spec(args, cfg)
    dm = parse_dataset(_read_text(args.data), cfg)
    ev = evaluate_dataset(dm, cfg)
    scores = _mode_scores(ev, spec, cfg)
    ranked = rank_scores(scores, tolerance=cfg.tolerance)
    by_id = {ident: pt for ident, pt in zip(ev.ids, ev.points())}
    aligned = [by_id[e.id] for e in ranked]
    sys.stdout.write(emit_ranking_report(
        ranked, aligned, _FORMAT_MAP[args.format]))
    if getattr(spec, "family", None) == "elliptic" and spec.force \
            and spec.below_limit(cfg.weights):
        sys.stderr.write(
            "note: epsilon at or below the operational limit; the "
            "max/min location property does not hold\n")
    return 0


def _cmd_wmsd(args) -> int:
    cfg = _load_config(args.config)
    dm = parse_dataset(_read_text(args.data), cfg)
    ev = evaluate_dataset(dm, cfg)
    sys.stdout.write(f"{'id':<12}{'WM':>10}{'WSD':>10}\n")
    for ident, p in zip(ev.ids, ev.points()):
        sys.stdout.write(f"{ident:<12}{p.wm:>10.4f}{p.wsd:>10.4f}\n")
    return 0


def _cmd_epsilon_limit(args) -> int:
    cfg = _load_config(args.config)
    limit = epsilon_limit(args.agg, cfg.weights)
    if math.isinf(limit):
        sys.stdout.write("unbounded\n")
    else:
        sys.stdout.write(f"{limit:.6f}\n")
    return 0


def _parse_values(text: str) -> list[float]:
    try:
        vals = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ParseError(f"bad value list {text!r}") from exc
    if not vals:
        raise ParseError("empty value list")
    return vals


def _cmd_isolines(args) -> int:
    cfg = _load_config(args.config)
    w = cfg.weights
    model = SpaceModel.build(w)
    curves = [isoline(args.agg, args.epsilon, v, w)
              for v in _parse_values(args.values)]
    svg = emit_svg(boundary=list(model.boundary), isolines=curves,
                   window=(0.0, model.m, 0.0, max(model.wsd_max, 1e-6) * 1.05))
    _write_text(args.out, svg)
    return 0


def _parse_resolution(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise ParseError(f"resolution must look like 128x128, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParseError(f"bad resolution {text!r}") from exc


def _cmd_field(args) -> int:
    cfg = _load_config(args.config)
    spec = _build_spec(args, cfg)
    if isinstance(spec, LexSpec):
        raise DomainViolation("field rendering needs a scalar aggregation")
    w = cfg.weights
    model = SpaceModel.build(w)
    res = _parse_resolution(args.res)
    window = (0.0, model.m, 0.0, max(model.wsd_max, 1e-6) * 1.05)
    fld = scalar_field(spec, w, window=window, resolution=res, model=model)
    if spec.family == "M":
        # color scale expects [0,1]; M spans [0, mean(w)]
        fld = dataclasses.replace(fld, values=fld.values / model.m)
    diverging = spec.family in ("classic", "elliptic") and spec.kind == "R"
    svg = emit_svg(field=fld, boundary=list(model.boundary),
                   diverging=diverging, clipped=not args.unclipped)
    _write_text(args.out, svg)
    return 0


def _cmd_check_property(args) -> int:
    cfg = _load_config(args.config)
    # probing is the point here, so the spec is always forced
    spec = AggregationSpec(family="elliptic", kind=args.agg,
                           epsilon=args.epsilon, force=True)
    report = check_minmax_property(spec, cfg.weights,
                                   resolution=args.resolution)
    verdict = "satisfied" if report.satisfied else "violated"
    sys.stdout.write(f"{verdict}\n")
    sys.stdout.write(
        f"minimum {report.minimum:.4f} at "
        f"{_fmt_points(report.argmin)}\n")
    sys.stdout.write(
        f"maximum {report.maximum:.4f} at "
        f"{_fmt_points(report.argmax)}\n")
    return 0


def _fmt_points(points, limit: int = 4) -> str:
    shown = ", ".join(f"({p.wm:.4f}, {p.wsd:.4f})" for p in points[:limit])
    if len(points) > limit:
        shown += f" and {len(points) - limit} more"
    return shown


def _parse_spec_token(token: str, cfg: ProjectConfig):
    """One compare token: KIND, KIND@eps, M, or a lex variant name."""
    token = token.strip()
    name, _, eps_text = token.partition("@")
    epsilon = None
    if eps_text:
        try:
            epsilon = float(eps_text)
        except ValueError as exc:
            raise ParseError(f"bad epsilon in spec {token!r}") from exc
    if name in KINDS:
        if epsilon is None:
            spec = AggregationSpec(family="classic", kind=name)
        else:
            spec = AggregationSpec(family="elliptic", kind=name,
                                   epsilon=epsilon)
    elif name == "M":
        spec = AggregationSpec(family="M")
    elif name in LEX_VARIANTS:
        spec = LexSpec(variant=name,
                       epsilon=epsilon if epsilon is not None else 1.0)
    else:
        raise ParseError(f"unknown spec token {token!r}")
    spec.validate(cfg.weights)
    return spec


def _cmd_compare(args) -> int:
    cfg = _load_config(args.config)
    tokens = [t for t in args.specs.split(",") if t.strip()]
    if not tokens:
        raise ParseError("empty spec list")
    specs = [_parse_spec_token(t, cfg) for t in tokens]
    dm = parse_dataset(_read_text(args.data), cfg)
    ev = evaluate_dataset(dm, cfg)

    from .reports import _fmt_score  # same formatting as the reports
    columns = []
    for spec in specs:
        scores = _mode_scores(ev, spec, cfg)
        ranked = rank_scores(scores, tolerance=cfg.tolerance)
        pos = {e.id: e.position for e in ranked}
        val = {ident: score for ident, score in scores}
        columns.append((spec.label(), pos, val))

    rows = [["id"] + [label for label, _, _ in columns]]
    for ident in ev.ids:
        row = [ident]
        for _, pos, val in columns:
            row.append(f"{_fmt_score(val[ident])} ({pos[ident]})")
        rows.append(row)
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    for r in rows:
        sys.stdout.write("  ".join(
            cell.ljust(widths[c]) for c, cell in enumerate(r)).rstrip()
            + "\n")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port,
                log_level="warning")
    return 0


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise ParseError(f"cannot write {path}: {exc.strerror}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wmsdrank",
        description="Rank alternatives with TOPSIS-style aggregations "
                    "in WM/WSD coordinates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_config(p):
        p.add_argument("--data", required=True, help="dataset CSV path")
        p.add_argument("--config", required=True, help="config YAML path")

    p = sub.add_parser("rank", help="rank alternatives")
    add_data_config(p)
    p.add_argument("--agg", choices=AGG_CHOICES,
                   help="aggregation (default: from config)")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--p", type=int, choices=(-1, 1), default=1,
                   help="sign parameter for RLpm/XLpm")
    p.add_argument("--force-epsilon", action="store_true",
                   dest="force_epsilon")
    p.add_argument("--format", choices=sorted(_FORMAT_MAP),
                   default="table")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("wmsd", help="per-alternative WM/WSD table")
    add_data_config(p)
    p.set_defaults(func=_cmd_wmsd)

    p = sub.add_parser("epsilon-limit",
                       help="operational epsilon limit for a kind")
    p.add_argument("--config", required=True)
    p.add_argument("--agg", choices=list(KINDS), required=True)
    p.set_defaults(func=_cmd_epsilon_limit)

    p = sub.add_parser("isolines", help="render isolines to SVG")
    p.add_argument("--config", required=True)
    p.add_argument("--agg", choices=list(KINDS), required=True)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--values", required=True,
                   help="comma-separated levels in (0,1)")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_isolines)

    p = sub.add_parser("field", help="render an aggregation field to SVG")
    p.add_argument("--config", required=True)
    p.add_argument("--agg", choices=list(KINDS) + ["M"], required=True)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--force-epsilon", action="store_true",
                   dest="force_epsilon")
    p.add_argument("--res", required=True, help="resolution, e.g. 256x256")
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--unclipped", action="store_true",
                   help="also paint cells outside the attainable region")
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("check-property",
                       help="probe the max/min location property")
    p.add_argument("--config", required=True)
    p.add_argument("--agg", choices=list(KINDS), required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--resolution", type=int, default=256)
    p.set_defaults(func=_cmd_check_property)

    p = sub.add_parser("compare",
                       help="side-by-side scores for several specs")
    add_data_config(p)
    p.add_argument("--specs", required=True,
                   help="comma-separated tokens, e.g. R,R@0.8,M,IL")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def _main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except WmsdrankError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    raise SystemExit(_main())


if __name__ == "__main__":
    main()
