"""End-to-end stability analysis of a grid."""

from dataclasses import dataclass

import numpy as np

from .admittance import AdmittanceMatrix, build_y0
from .coupling import StabilityReport, build_coupling, stability_value, stability_values
from .kron import iterative_reduce, schur_reduce


@dataclass(frozen=True)
class Analysis:
    y0: AdmittanceMatrix
    y: np.ndarray
    p: np.ndarray
    report: StabilityReport

    @property
    def alpha2(self):
        return self.report.alpha2


def analyze(g, constants=None, method="schur"):
    """Grid -> admittance matrix -> Kron reduction -> coupling -> alpha2."""
    y0 = build_y0(g)
    if method == "schur":
        y = schur_reduce(y0)
    elif method == "iterative":
        y = iterative_reduce(y0)
    else:
        raise ValueError(f"unknown reduction method {method!r}")
    p = build_coupling(y, constants)
    return Analysis(y0, y, p, stability_value(p))


def coupling_of(g, constants=None):
    return build_coupling(schur_reduce(build_y0(g)), constants)


def alpha2(g, constants=None):
    return analyze(g, constants).alpha2


def alpha2_many(grids, constants=None):
    """``alpha2`` for many same-size grids with one batched eigensolve."""
    grids = list(grids)
    if not grids:
        return np.zeros(0)
    ps = np.stack([coupling_of(g, constants) for g in grids])
    return np.array([r.alpha2 for r in stability_values(ps)])
