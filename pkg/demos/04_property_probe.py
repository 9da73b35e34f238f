"""Probe the extremum-location property of elliptic aggregations.

A well behaved aggregation should be worst exactly at the anti-ideal
image (0, 0) and best exactly at the ideal image (mean(w), 0). Shrink
epsilon far enough and that breaks: I dips below zero away from the
corners and A overshoots one. This script probes a three-criterion
weight vector on both sides of the breaking point.
"""

from wmsdrank import AggregationSpec, WeightVector, check_minmax_property

w = WeightVector([1.0, 0.6, 0.5])


def describe(kind, eps, resolution=256):
    spec = AggregationSpec(family="elliptic", kind=kind, epsilon=eps,
                           force=True)
    rep = check_minmax_property(spec, w, resolution=resolution)
    verdict = "satisfied" if rep.satisfied else "VIOLATED"
    print(f"{kind} at eps={eps}: {verdict}")
    print(f"  min {rep.minimum:+.4f} at "
          + ", ".join(f"({p.wm:.2f}, {p.wsd:.2f})" for p in rep.argmin[:3]))
    print(f"  max {rep.maximum:+.4f} at "
          + ", ".join(f"({p.wm:.2f}, {p.wsd:.2f})" for p in rep.argmax[:3]))


print(f"weights {[float(x) for x in w.values]}, mean m = {w.mean:.4f}\n")

# Far below the operational limit: I goes negative in the interior and
# A exceeds 1, both at points well away from the reference corners.
describe("I", 0.3333)
describe("A", 0.3333)
print()

# Above the limit both kinds behave.
describe("I", 0.70)
describe("A", 0.70)
print()

# R never misbehaves this way, whatever the epsilon.
describe("R", 0.1)
describe("R", 10.0)
