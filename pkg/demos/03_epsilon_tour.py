"""Sweep the epsilon parameter and watch the ranking deform.

Epsilon rescales the WSD axis before measuring distances to the ideal
and anti-ideal points. Small epsilon discounts dispersion, large
epsilon amplifies it, and the limit of a huge epsilon is the plain
mean-of-weighted-utilities order M. Below an operational limit the
I and A aggregations stop being extremal at the reference points, so
the library refuses such epsilons unless forced.
"""

import math
from pathlib import Path

from wmsdrank import (
    AggregationSpec,
    epsilon_limit,
    evaluate_dataset,
    load_config_file,
    mode_scores,
    parse_dataset,
    rank,
    theta_to_epsilon,
)

ROOT = Path(__file__).resolve().parent.parent

cfg = load_config_file(str(ROOT / "data" / "buses_config.yaml"))
dm = parse_dataset((ROOT / "data" / "buses.csv").read_text(), cfg)
ev = evaluate_dataset(dm, cfg)


def order(spec):
    ranked = rank(mode_scores(ev, spec, cfg), tolerance=cfg.tolerance)
    return " > ".join(e.id for e in sorted(ranked, key=lambda e: e.position))


print("operational limits for these weights:")
for kind in ("I", "A", "R"):
    lim = epsilon_limit(kind, cfg.weights)
    shown = "unbounded (any positive epsilon works)" if math.isinf(lim) \
        else f"{lim:.6f}"
    print(f"  {kind}: {shown}")
print()

for eps in (0.8, 1.0, 7 / 3, 1e6):
    spec = AggregationSpec(family="elliptic", kind="R", epsilon=eps)
    print(f"R at eps={eps:g}: {order(spec)}")

print(f"M reference:  {order(AggregationSpec(family='M'))}")
print()

# The theta slider is a bounded reparametrization: eps = theta/(1-theta),
# so theta 0.5 is the classic circle and theta -> 1 tends to M.
for theta in (0.4, 0.5, 0.7):
    eps = theta_to_epsilon(theta)
    print(f"theta={theta} maps to eps={eps:.4f}")

# Asking for an I below its limit raises unless force is set.
lim = epsilon_limit("I", cfg.weights)
try:
    AggregationSpec(family="elliptic", kind="I",
                    epsilon=0.5).validate(cfg.weights)
except Exception as exc:
    print(f"I at eps=0.5 rejected: {exc}")
forced = AggregationSpec(family="elliptic", kind="I", epsilon=0.5,
                         force=True).validate(cfg.weights)
print(f"forced through anyway below limit {lim:.4f}: {order(forced)}")
