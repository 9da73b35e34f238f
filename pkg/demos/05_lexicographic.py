"""Lexicographic aggregations on the bus fleet.

Instead of blending WM and WSD into one scalar, the lexicographic
variants return ordered tuples: the dominant component decides and the
second only breaks ties. RL is centered at WM = m/2, so an alternative
sitting exactly on that midline gets a zero second component and is
ranked purely by its mean.
"""

from pathlib import Path

from wmsdrank import (
    LexSpec,
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

for name in ("IL", "AL", "RL"):
    spec = LexSpec(variant=name)
    ranked = rank(mode_scores(ev, spec, cfg), tolerance=cfg.tolerance)
    print(name)
    for e in ranked:
        first, second = e.score
        print(f"  ({e.position:2d}) {e.id}  ({first:+.4f}, {second:+.4f})")
    print()

# b03 sits at WM = 0.50 = m/2 for unit weights, the RL pivot, so its
# second component vanishes and only the first decides its place.
rl = dict(mode_scores(ev, LexSpec(variant="RL"), cfg))
print("RL tuple for b03:", tuple(round(x, 4) for x in rl["b03"]))
