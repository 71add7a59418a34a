"""Coupling matrix of the linearised swing dynamics and the stability value.

For identical generators at a common phase the coupling entry between two
generators is ``P_ij = -kappa * B_ij`` with ``B_ij`` the susceptance of the
reduced admittance matrix; rows sum to zero.  The stability value ``alpha2``
is the smallest eigenvalue of ``P`` other than the structural zero mode.
"""

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .admittance import AdmittanceMatrix
from .errors import (
    Disconnected,
    InputError,
    MultipleZeroModes,
    NonSymmetricResult,
    NotUniform,
    NoZeroMode,
    TransparencyMismatch,
    ZeroAdmittance,
)
from .grid import is_connected
from .kron import schur_reduce
from .numerics import SYMMETRY_RTOL, eig_symmetric

ZERO_RTOL = 1e-8


class Verdict(enum.Enum):
    STABLE = "Stable"
    UNSTABLE = "Unstable"
    MARGINAL = "Marginal"


@dataclass(frozen=True)
class CouplingConstants:
    """``kappa`` is the common factor ``omega_R E_i E_j / (2 H_i)``."""

    kappa: float = 1.0
    phases: Optional[Sequence[float]] = None

    def __post_init__(self):
        if not self.kappa > 0:
            raise InputError(f"kappa must be positive, got {self.kappa}")


def build_coupling(y, constants=None):
    y = np.asarray(y, dtype=complex)
    n = y.shape[0]
    if n < 2:
        raise InputError("coupling needs at least two generators")
    c = constants or CouplingConstants()
    if c.phases is None:
        off = -c.kappa * y.imag
    else:
        delta = np.asarray(c.phases, dtype=float)
        if delta.shape != (n,):
            raise InputError(f"expected {n} phases, got {delta.shape}")
        dij = delta[:, None] - delta[None, :]
        off = c.kappa * (y.real * np.sin(dij) - y.imag * np.cos(dij))
    p = off - np.diag(np.diag(off))
    p[np.diag_indices(n)] = -p.sum(axis=1)
    scale = max(1.0, float(np.abs(p).max()))
    if np.abs(p - p.T).max() > SYMMETRY_RTOL * scale:
        raise NonSymmetricResult("coupling matrix is not symmetric for these phases")
    return (p + p.T) / 2.0


@dataclass(frozen=True)
class StabilityReport:
    spectrum: np.ndarray
    zero_mode_value: float
    alpha2: float
    verdict: Verdict


def zero_tolerance(p):
    return ZERO_RTOL * max(1.0, float(np.abs(p).sum(axis=-1).max()))


def _support_connected(p, tol):
    n = p.shape[0]
    adj = np.abs(p - np.diag(np.diag(p))) > tol
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in np.flatnonzero(adj[x]):
            if y not in seen:
                seen.add(int(y))
                stack.append(int(y))
    return len(seen) == n


def _report(p, w):
    tau = zero_tolerance(p)
    near = np.flatnonzero(np.abs(w) <= tau)
    if near.size == 0:
        raise NoZeroMode(f"no eigenvalue within {tau:.3e} of zero; row sums are not zero")
    if near.size > 1 and not _support_connected(p, tau):
        raise MultipleZeroModes("coupling graph is disconnected: several zero modes")
    zero = near[np.argmin(np.abs(w[near]))]
    rest = np.delete(w, zero)
    alpha2 = float(rest.min())
    if alpha2 > tau:
        verdict = Verdict.STABLE
    elif alpha2 < -tau:
        verdict = Verdict.UNSTABLE
    else:
        verdict = Verdict.MARGINAL
    return StabilityReport(w, float(w[zero]), alpha2, verdict)


def stability_value(p):
    """Spectrum, zero mode, ``alpha2`` and verdict for one coupling matrix.

    The structural zero is the eigenvalue closest to zero, not the smallest
    one: unstable grids have eigenvalues below zero.
    """
    p = np.asarray(p, dtype=float)
    return _report(p, eig_symmetric(p))


def stability_values(ps):
    """Vectorised :func:`stability_value` over a stack of coupling matrices."""
    ps = np.asarray(ps, dtype=float)
    ws = eig_symmetric(ps)
    return [_report(p, w) for p, w in zip(ps, ws)]


def gershgorin_classify_uniform(g, c_scalar, tol=1e-12):
    """Verdict for a grid whose every branch is the pure susceptance ``c j``.

    No eigensolve: the coupling rows are diagonally dominant with sign fixed
    by ``c``, so ``c < 0`` (inductive) is stable and ``c > 0`` unstable.
    """
    if c_scalar == 0:
        raise ZeroAdmittance("common susceptance must be nonzero")
    target = complex(0.0, c_scalar)
    for e in g.edges:
        if abs(e.admittance - target) > tol * abs(c_scalar):
            raise NotUniform(f"edge ({e.a}, {e.b}) has admittance {e.admittance}, not {target}")
    if not is_connected(g):
        raise Disconnected("grid is not connected")
    return Verdict.STABLE if c_scalar < 0 else Verdict.UNSTABLE


@dataclass(frozen=True)
class TransparencyResult:
    passed: bool
    reduced_residual: float
    coupling_residual: float


def load_transparency_check(a_core, tol=1e-12, strict=True):
    """Reduce a grid whose generators each own one private load.

    ``a_core`` is the admittance matrix of the generator-only grid with every
    branch ``-j``.  Attaching a ``-j`` branch from each generator to its own
    load gives ``Y0 = [[A, jI], [jI, -jI]]`` with ``A = a_core - jI``; the
    reduction must return ``A + jI`` and leave the coupling matrix unchanged.
    """
    a_core = np.asarray(a_core, dtype=complex)
    n = a_core.shape[0]
    if n < 2:
        raise InputError("load transparency needs at least two generators")
    off = a_core - np.diag(np.diag(a_core))
    if not np.all((np.abs(off) <= tol) | (np.abs(off - 1j) <= tol)):
        raise NotUniform("generator core must have every branch equal to -j")
    eye = np.eye(n)
    a_block = a_core - 1j * eye
    y0 = np.block([[a_block, 1j * eye], [1j * eye, -1j * eye]])
    shunts = y0.sum(axis=1)
    y = schur_reduce(AdmittanceMatrix(y0, n, shunts))
    reduced_res = float(np.abs(y - (a_block + 1j * eye)).max())
    coupling_res = float(np.abs(build_coupling(y) - build_coupling(a_block)).max())
    passed = reduced_res <= tol and coupling_res <= tol
    if strict and not passed:
        raise TransparencyMismatch(
            f"reduced matrix deviates by {reduced_res:.3e}, coupling by {coupling_res:.3e}",
            max(reduced_res, coupling_res),
        )
    return TransparencyResult(passed, reduced_res, coupling_res)
