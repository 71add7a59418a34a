"""Dense matrix kernels: complex LU solve, products, symmetric eigensolver.

The eigensolver is a cyclic Jacobi method vectorised over a leading batch
axis, so a stack of small coupling matrices (e.g. every labeled tree on
seven nodes) is diagonalised in one call.
"""

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotSymmetric, SingularMatrix

PIVOT_RTOL = 1e-12
SYMMETRY_RTOL = 1e-12


def _as_finite(a, dtype):
    a = np.asarray(a, dtype=dtype)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def matmul(a, b):
    a = _as_finite(a, complex)
    b = _as_finite(b, complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def cx_lu_solve(m, rhs):
    """Solve ``m @ x = rhs`` by LU factorisation with partial pivoting.

    ``rhs`` may be a vector or a matrix of right-hand sides. Raises
    :class:`SingularMatrix` when a pivot falls below ``1e-12`` times the
    largest entry magnitude of ``m``.
    """
    m = _as_finite(m, complex)
    rhs = _as_finite(rhs, complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got {m.shape}")
    n = m.shape[0]
    vector_rhs = rhs.ndim == 1
    b = rhs.reshape(n, -1).copy() if rhs.shape[0] == n else None
    if b is None:
        raise DimensionMismatch(f"rhs has {rhs.shape[0]} rows, matrix has {n}")

    lu = m.copy()
    scale = np.abs(m).max() if n else 0.0
    tol = PIVOT_RTOL * scale
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if not abs(lu[p, k]) > tol:
            raise SingularMatrix(f"pivot {k} has magnitude {abs(lu[p, k]):.3e} <= {tol:.3e}")
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            b[[k, p]] = b[[p, k]]
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
        b[k + 1:] -= np.outer(lu[k + 1:, k], b[k])

    for k in range(n - 1, -1, -1):
        b[k] -= lu[k, k + 1:] @ b[k + 1:]
        b[k] /= lu[k, k]
    return b[:, 0] if vector_rhs else b


def check_symmetric(m, rtol=SYMMETRY_RTOL):
    """Return ``m`` as a float array, raising NotSymmetric if it is not."""
    m = _as_finite(m, float)
    if m.shape[-1] != m.shape[-2]:
        raise NotSymmetric(f"matrix must be square, got {m.shape}")
    scale = np.abs(m).max(axis=(-2, -1), keepdims=True) if m.size else 0.0
    resid = np.abs(m - np.swapaxes(m, -1, -2))
    if np.any(resid > rtol * scale):
        raise NotSymmetric(f"asymmetry {resid.max():.3e} exceeds tolerance")
    return m


def _jacobi(a, want_vectors, tol, max_sweeps):
    # a: (batch, n, n), modified in place
    batch, n, _ = a.shape
    v = np.broadcast_to(np.eye(n), a.shape).copy() if want_vectors else None
    frob = np.sqrt((a * a).sum(axis=(1, 2)))
    iu = np.triu_indices(n, 1)
    idx = np.arange(batch)
    for _ in range(max_sweeps):
        off = np.sqrt(2.0 * (a[:, iu[0], iu[1]] ** 2).sum(axis=1))
        if np.all(off <= tol * np.maximum(frob, np.finfo(float).tiny)):
            return a, v
        for p, q in zip(*iu):
            apq = a[:, p, q]
            active = apq != 0.0
            if not active.any():
                continue
            safe = np.where(active, apq, 1.0)
            theta = (a[:, q, q] - a[:, p, p]) / (2.0 * safe)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            cc, ss = c[:, None], s[:, None]
            ap, aq = a[:, :, p].copy(), a[:, :, q].copy()
            a[:, :, p] = cc * ap - ss * aq
            a[:, :, q] = ss * ap + cc * aq
            ap, aq = a[:, p, :].copy(), a[:, q, :].copy()
            a[:, p, :] = cc * ap - ss * aq
            a[:, q, :] = ss * ap + cc * aq
            a[idx, p, q] = 0.0
            a[idx, q, p] = 0.0
            if want_vectors:
                vp, vq = v[:, :, p].copy(), v[:, :, q].copy()
                v[:, :, p] = cc * vp - ss * vq
                v[:, :, q] = ss * vp + cc * vq
    raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def eig_symmetric(m, eigenvectors=False, tol=1e-15, max_sweeps=60):
    """Eigen-decomposition of a real symmetric matrix (or stack of them).

    Parameters
    ----------
    m : array_like, shape (..., n, n)
        Symmetric to within ``1e-12`` relative tolerance.
    eigenvectors : bool
        Also return the orthonormal eigenvector matrix ``Q`` with
        ``m = Q diag(w) Q.T``; columns follow the eigenvalue order.

    Returns
    -------
    w : ndarray, shape (..., n)
        Eigenvalues in nondecreasing order.
    """
    m = check_symmetric(m)
    shape = m.shape
    n = shape[-1]
    a = ((m + np.swapaxes(m, -1, -2)) / 2.0).reshape(-1, n, n).copy()
    if n == 0:
        w = np.zeros(shape[:-1])
        return (w, np.zeros(shape)) if eigenvectors else w
    # tiny off-diagonals overflow theta; t -> 0 is then the right rotation
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        a, v = _jacobi(a, eigenvectors, tol, max_sweeps)
    w = np.diagonal(a, axis1=1, axis2=2).copy()
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1).reshape(shape[:-1])
    if not eigenvectors:
        return w
    v = np.take_along_axis(v, order[:, None, :], axis=2).reshape(shape)
    return w, v
