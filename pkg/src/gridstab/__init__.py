"""Steady-state stability of uniform synchronous power-grid topologies.

Pipeline: :func:`build_y0` (nodal admittance) -> :func:`schur_reduce` (Kron
reduction onto generators) -> :func:`build_coupling` -> :func:`stability_value`
whose ``alpha2`` is positive exactly for stable grids.
"""

from .admittance import AdmittanceMatrix, build_y0, validate_y0
from .circulant import alpha2_closed_form, circulant_sweep, quadratic_fit
from .coupling import (
    CouplingConstants,
    StabilityReport,
    Verdict,
    build_coupling,
    gershgorin_classify_uniform,
    load_transparency_check,
    stability_value,
)
from .errors import GridStabError
from .grid import (
    Edge,
    GridSpec,
    Node,
    NodeKind,
    diameter,
    distance,
    generate_named,
    is_connected,
    tree_from_pruefer,
)
from .kron import iterative_reduce, preservation_report, schur_reduce
from .numerics import cx_lu_solve, eig_symmetric, matmul
from .pipeline import alpha2, analyze
from .swing import SimConfig, divergence_detect, ripple_metric, simulate

__version__ = "0.1.0"
