"""
Trees: diameter against alpha2, closing cycles, and joining two trees
"""

from collections import defaultdict

from gridstab.experiments import best_join_edge, cycle_addition_experiment, tree_diameter_experiment
from gridstab.grid import generate_named

## Every labeled tree on 7 nodes
rep = tree_diameter_experiment(7)
best = defaultdict(float)
for r in rep.records:
    best[r.diameter] = max(best[r.diameter], r.alpha2)
for d in sorted(best):
    print(f"diameter {d}: largest alpha2 {best[d]:.5f}")
print(rep.instances, "trees,", rep.verdict)

## Adding one edge to a path
# On five nodes the longest closure wins.  On seven nodes it no longer does.
for n in (5, 7):
    cyc = cycle_addition_experiment(generate_named("path", n))
    print(f"path {n}:", cyc.verdict, f"({cyc.violation_count} violating pairs)")
    for f in sorted(cyc.records, key=lambda f: -f.alpha2)[:3]:
        print("   edge", f.edge, "cycle", f.cycle_length, "alpha2", round(f.alpha2, 4))

## Joining two stars
res = best_join_edge(generate_named("star", 4), generate_named("star", 5))
print("best edge", res.best.edge, "alpha2", round(res.best.alpha2, 5),
      "center edge", res.center_edge)
