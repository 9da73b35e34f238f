"""Draw the attainable WM/WSD region for the bus weights.

Renders one SVG with four layers: the closeness field R as a colored
background, the upper boundary of the attainable region, three R
isolines and the ten buses as labelled dots.

Writes demos/out/wmsd_map.svg.
"""

from pathlib import Path

from wmsdrank import (
    AggregationSpec,
    SpaceModel,
    emit_svg,
    evaluate_dataset,
    isoline,
    load_config_file,
    parse_dataset,
    scalar_field,
)

ROOT = Path(__file__).resolve().parent.parent
OUT = Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

cfg = load_config_file(str(ROOT / "data" / "buses_config.yaml"))
dm = parse_dataset((ROOT / "data" / "buses.csv").read_text(), cfg)
ev = evaluate_dataset(dm, cfg)

model = SpaceModel.build(cfg.weights)
print("region vertices (first 6 of %d):" % len(model.vertices))
for p in model.vertices[:6]:
    print(f"  ({p.wm:.4f}, {p.wsd:.4f})")
print("max attainable WSD: %.4f" % model.wsd_max)

spec = AggregationSpec(family="classic", kind="R")
field = scalar_field(spec, cfg.weights, resolution=(192, 128), model=model)

levels = [0.25, 0.5, 0.75]
lines = [isoline("R", 1.0, v, cfg.weights) for v in levels]

svg = emit_svg(
    field=field,
    boundary=list(model.boundary),
    isolines=lines,
    points=list(zip(ev.ids, ev.points())),
)
target = OUT / "wmsd_map.svg"
target.write_text(svg)
print("wrote", target)
