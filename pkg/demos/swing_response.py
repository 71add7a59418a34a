"""
Linearized swing response to a short pulse on one generator
"""

import numpy as np

from gridstab.grid import two_generators_one_load
from gridstab.pipeline import analyze
from gridstab.swing import SimConfig, divergence_detect, ripple_metric, simulate

## A stable and an unstable grid
for ks in [(1, -0.25, 1), (0, -0.25, 1)]:
    res = analyze(two_generators_one_load(*ks))
    for gamma in (0.2, 2.0):
        tr = simulate(res.p, SimConfig(gamma=gamma))
        print(f"k={ks} alpha2={res.alpha2:+.3f} gamma={gamma}: {divergence_detect(tr).value}",
              f"diverged at {tr.diverged_at}" if tr.diverged_at else "")

## Ripple against alpha2 for two coupled machines
# In this linear model the acceleration ripple grows with alpha2.
for a in (0.0532, 0.264, 5.3):
    p = np.array([[a / 2, -a / 2], [-a / 2, a / 2]])
    tr = simulate(p, SimConfig())
    print(f"alpha2={a}: ripple {ripple_metric(tr):.4f}, {divergence_detect(tr).value}")
