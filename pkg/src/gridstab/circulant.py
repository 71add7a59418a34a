"""Stability values of regular circulant grids and a quadratic surface fit."""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import HopOutOfRange, OddRequired, RankDeficient
from .grid import generate_named
from .pipeline import alpha2


def _check(n, k):
    if n < 3 or n % 2 == 0:
        raise OddRequired(f"n must be odd and >= 3, got {n}")
    if not 1 <= k <= (n - 1) // 2:
        raise HopOutOfRange(f"k={k} outside 1..{(n - 1) // 2}")


def alpha2_closed_form(n, k):
    """``(2k+1) - sin((2k+1) pi/n) / sin(pi/n)`` for the degree-2k circulant on n nodes."""
    _check(n, k)
    return (2 * k + 1) - math.sin((2 * k + 1) * math.pi / n) / math.sin(math.pi / n)


@dataclass(frozen=True)
class CirculantPoint:
    n: int
    k: int
    alpha2_closed: float
    alpha2_numeric: float

    @property
    def degree(self):
        return 2 * self.k

    @property
    def abs_err(self):
        return abs(self.alpha2_closed - self.alpha2_numeric)


def circulant_sweep(n_max):
    """Closed-form and eigensolved alpha2 for every odd ``3 <= n <= n_max``."""
    if n_max < 3 or n_max % 2 == 0:
        raise OddRequired(f"n_max must be odd and >= 3, got {n_max}")
    points = []
    for n in range(3, n_max + 1, 2):
        for k in range(1, (n - 1) // 2 + 1):
            numeric = alpha2(generate_named("circulant", n, k, edge_admittance=-1j))
            points.append(CirculantPoint(n, k, alpha2_closed_form(n, k), numeric))
    return points


SWEEP_COLUMNS = ("n", "k", "degree", "alpha2_closed", "alpha2_numeric", "abs_err")


def fmt(x):
    return format(x, ".12g")


def write_sweep_csv(points, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for p in points:
        w.writerow([p.n, p.k, p.degree, fmt(p.alpha2_closed), fmt(p.alpha2_numeric),
                    fmt(p.abs_err)])


def read_sweep_csv(fh):
    """``(n, degree, alpha2)`` triples from a sweep CSV (closed-form column)."""
    rows = csv.DictReader(fh)
    return [(int(r["n"]), int(r["degree"]), float(r["alpha2_closed"])) for r in rows]


MONOMIALS = ("1", "n", "d", "n^2", "n*d", "d^2")


@dataclass(frozen=True)
class QuadraticSurface:
    coefficients: np.ndarray  # ordered as MONOMIALS
    r2: float

    def __call__(self, n, d):
        n = np.asarray(n, dtype=float)
        d = np.asarray(d, dtype=float)
        return _design(n, d) @ self.coefficients


def _design(n, d):
    n = np.atleast_1d(n)
    d = np.atleast_1d(d)
    return np.column_stack([np.ones_like(n), n, d, n * n, n * d, d * d])


def quadratic_fit(points):
    """Least-squares surface ``alpha2 ~ c0 + c1 n + c2 d + c3 n^2 + c4 n d + c5 d^2``.

    Solved through the normal equations.  ``r2`` is 1 when the data have no
    variance.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 7:
        raise RankDeficient("need at least 7 (n, degree, alpha2) points")
    n, d, z = pts.T
    x = _design(n, d)
    if np.linalg.matrix_rank(x) < x.shape[1]:
        raise RankDeficient("sample points do not determine a quadratic surface")
    coef = np.linalg.solve(x.T @ x, x.T @ z)
    ss_tot = float(((z - z.mean()) ** 2).sum())
    ss_res = float(((z - x @ coef) ** 2).sum())
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return QuadraticSurface(coef, r2)
