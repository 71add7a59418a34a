"""
Two generators sharing one load: from branch constants to a stability verdict
"""

import numpy as np

from gridstab import admittance, coupling, kron
from gridstab.grid import two_generators_one_load

## Build the three-node grid
# Nodes 0 and 1 are generators, node 2 is the load.  Each branch constant k
# becomes an inductive admittance -k j.
g = two_generators_one_load(k12=1.0, k13=-0.25, k23=1.0)
y0 = admittance.build_y0(g)
print("Y0 =\n", y0.matrix)

## Eliminate the load
# The Schur complement and the one-load-at-a-time route give the same matrix.
y = kron.schur_reduce(y0)
print("reduced Y =\n", y)
print("iterative agrees:", np.allclose(y, kron.iterative_reduce(y0)))

## Coupling matrix and its second eigenvalue
p = coupling.build_coupling(y)
rep = coupling.stability_value(p)
print("P =\n", p)
print("spectrum:", rep.spectrum, "alpha2:", rep.alpha2, rep.verdict.value)

## Closed form for this topology
k12, k13, k23 = 1.0, -0.25, 1.0
print("closed form:", 2 * (k12 + k13 * k23 / (k13 + k23)))

## Sweeping k12 across the stability boundary
for k in np.linspace(-0.5, 1.0, 7):
    r = coupling.stability_value(coupling.build_coupling(
        kron.schur_reduce(admittance.build_y0(two_generators_one_load(k, k13, k23)))))
    print(f"k12={k:+.2f}  alpha2={r.alpha2:+.4f}  {r.verdict.value}")
