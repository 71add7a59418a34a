"""Nodal admittance matrix construction.

Sign convention is standard nodal analysis: off-diagonal ``(r, s)`` is minus
the branch admittance between ``r`` and ``s``; diagonal ``(r, r)`` is the
node's shunt plus the sum of its incident branch admittances.  With an
inductive branch written ``Y_rs = -k_rs j`` the off-diagonal reads
``+k_rs j``, which is the k-form used in hand-worked examples.
"""

from dataclasses import dataclass

import numpy as np

from .errors import Disconnected
from .grid import is_connected


@dataclass(frozen=True)
class AdmittanceMatrix:
    matrix: np.ndarray
    n_generators: int
    shunts: np.ndarray

    @property
    def v(self):
        return self.matrix.shape[0]

    def blocks(self):
        """``(A, B, C, D)`` partition with A the generator block."""
        n = self.n_generators
        y = self.matrix
        return y[:n, :n], y[:n, n:], y[n:, :n], y[n:, n:]


def build_y0(g):
    if not is_connected(g):
        raise Disconnected("admittance matrix requires a connected grid")
    y = np.zeros((g.v, g.v), dtype=complex)
    shunts = np.array([nd.shunt for nd in g.nodes], dtype=complex)
    y[np.diag_indices(g.v)] = shunts
    for e in g.edges:
        y[e.a, e.b] -= e.admittance
        y[e.b, e.a] -= e.admittance
        y[e.a, e.a] += e.admittance
        y[e.b, e.b] += e.admittance
    return AdmittanceMatrix(y, g.n_generators, shunts)


@dataclass(frozen=True)
class Y0Diagnostics:
    symmetry_residual: float
    row_sum_residual: float
    symmetric: bool
    diagonally_dominant: bool
    strictly_dominant_rows: int


def validate_y0(y, tol=1e-12):
    """Symmetry, row-sum-equals-shunt and diagonal dominance checks."""
    m = y.matrix
    sym = float(np.abs(m - m.T).max()) if m.size else 0.0
    rows = float(np.abs(m.sum(axis=1) - y.shunts).max()) if m.size else 0.0
    diag = np.abs(np.diag(m))
    off = np.abs(m).sum(axis=1) - diag
    slack = tol * max(1.0, float(np.abs(m).max()) if m.size else 0.0)
    return Y0Diagnostics(
        symmetry_residual=sym,
        row_sum_residual=rows,
        symmetric=sym <= slack,
        diagonally_dominant=bool(np.all(diag >= off - slack)),
        strictly_dominant_rows=int(np.sum(diag > off + slack)),
    )
