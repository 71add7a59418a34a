"""Kron reduction of the nodal admittance matrix onto the generators.

Two routes are provided and are expected to agree: a one-shot Schur
complement ``A - B D^-1 C`` and classical node-by-node elimination.
"""

from dataclasses import dataclass, fields

import numpy as np

from .errors import NotUniform, SingularLoadBlock, SingularMatrix, SingularPivot
from .numerics import PIVOT_RTOL, cx_lu_solve, matmul


def schur_reduce(y):
    """Reduced ``n x n`` generator admittance matrix (Schur complement)."""
    a, b, c, d = y.blocks()
    if d.shape[0] == 0:
        return a.copy()
    try:
        x = cx_lu_solve(d, c)
    except SingularMatrix as exc:
        raise SingularLoadBlock(f"load block is not invertible: {exc}") from exc
    return a - matmul(b, x)


def iterative_reduce(y, order=None):
    """Eliminate loads one at a time, each step a 1x1 Schur complement.

    ``order`` lists the (global) load indices in elimination order; the
    default eliminates them from last to first.
    """
    n = y.n_generators
    m = y.matrix.copy()
    remaining = list(range(y.v))
    if order is None:
        order = range(y.v - 1, n - 1, -1)
    order = list(order)
    if sorted(order) != list(range(n, y.v)):
        raise ValueError(f"order must be a permutation of the load indices {n}..{y.v - 1}")
    for load in order:
        k = remaining.index(load)
        pivot = m[k, k]
        scale = np.abs(m[k]).max()
        if not abs(pivot) > PIVOT_RTOL * scale:
            raise SingularPivot(f"zero pivot eliminating load {load}", load)
        m = m - np.outer(m[:, k], m[k, :]) / pivot
        m = np.delete(np.delete(m, k, axis=0), k, axis=1)
        del remaining[k]
    return m


@dataclass(frozen=True)
class PreservationReport:
    symmetric: bool
    invertible: bool
    offdiag_nonpositive: bool
    diag_dominant: bool
    diag_positive: bool

    @property
    def all_hold(self):
        return all(getattr(self, f.name) for f in fields(self))


def _coefficients(mat, common, tol):
    k = np.asarray(mat, dtype=complex) / common
    scale = max(1.0, float(np.abs(k).max()))
    if np.abs(k.imag).max() > tol * scale:
        raise NotUniform("entries are not real multiples of the common admittance")
    return k.real


def uniform_coefficients(y0, common_value, tol=1e-9):
    """Coefficient matrix ``Y0 / A``, checked against the uniform-grid pattern.

    Off-diagonals must be 0 or -1 and ``diag - degree`` must be a common
    ``epsilon >= 0`` on generator rows and 0 on load rows.
    """
    if common_value == 0:
        raise NotUniform("common admittance must be nonzero")
    k = _coefficients(y0.matrix, common_value, tol)
    off = k - np.diag(np.diag(k))
    if not np.all((np.abs(off) <= tol) | (np.abs(off + 1) <= tol)):
        raise NotUniform("off-diagonal coefficients must be 0 or -1")
    excess = np.diag(k) + off.sum(axis=1)
    n = y0.n_generators
    if np.any(np.abs(excess[n:]) > tol):
        raise NotUniform("load rows must carry no shunt")
    eps = excess[:n]
    if eps.min() < -tol or np.ptp(eps) > tol:
        raise NotUniform("generator shunts must equal a common epsilon * A, epsilon >= 0")
    return k


def preservation_report(y0, y, common_value, tol=1e-9):
    """Check the properties Kron reduction inherits from a uniform ``Y0``."""
    uniform_coefficients(y0, common_value, tol)
    k = _coefficients(y, common_value, tol)
    scale = max(1.0, float(np.abs(k).max()))
    off = k - np.diag(np.diag(k))
    diag = np.diag(k)
    try:
        cx_lu_solve(k, np.eye(k.shape[0]))
        invertible = True
    except SingularMatrix:
        invertible = False
    return PreservationReport(
        symmetric=bool(np.abs(k - k.T).max() <= tol * scale),
        invertible=invertible,
        offdiag_nonpositive=bool(off.max(initial=0.0) <= tol * scale),
        diag_dominant=bool(np.all(diag >= -off.sum(axis=1) - tol * scale)),
        diag_positive=bool(np.all(diag > tol * scale)),
    )
