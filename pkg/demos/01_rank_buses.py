"""Rank the bundled bus fleet dataset.

Loads the 10-alternative, 8-criterion CSV plus its YAML config,
computes WM/WSD coordinates for every bus and prints the closeness
ranking next to two alternative aggregations.
"""

from pathlib import Path

from wmsdrank import (
    AggregationSpec,
    evaluate_dataset,
    load_config_file,
    mode_scores,
    parse_dataset,
    rank,
)

ROOT = Path(__file__).resolve().parent.parent

cfg = load_config_file(str(ROOT / "data" / "buses_config.yaml"))
dm = parse_dataset((ROOT / "data" / "buses.csv").read_text(), cfg)
ev = evaluate_dataset(dm, cfg)

print("per-bus WM/WSD coordinates (mean weight m = %.2f)" % cfg.weights.mean)
for ident, p in zip(ev.ids, ev.points()):
    print(f"  {ident}  WM={p.wm:.2f}  WSD={p.wsd:.2f}")
print()

# Three scalar aggregations over the same coordinates. R rewards being
# close to the ideal relative to both references, I only distance to
# the ideal, A only distance from the anti-ideal.
for kind in ("R", "I", "A"):
    spec = AggregationSpec(family="classic", kind=kind)
    ranked = rank(mode_scores(ev, spec, cfg), tolerance=cfg.tolerance)
    row = ", ".join(f"{e.id}({e.position})" for e in ranked)
    print(f"{kind}: {row}")
