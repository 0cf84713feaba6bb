"""Measurement objective and its exact reduction over one direction.

Local projective measurements along unit vectors a (first qubit) and b
(second qubit) score

    f(a, b) = 1 + (y.b)^2 + (x.a)^2 + (a.Tb)^2,

one quarter of which is the bilinear trace term maximized inside the
discord functional. For fixed b the a-dependence is the quadratic form of
x x' + (Tb)(Tb)', a symmetric matrix of rank at most 2 whose top eigenvalue
and eigenvector are available in closed form; that makes the maximization
over a exact and leaves only b to search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonUnitDirectionError, NotCanonicalFormError
from .pauli import CorrelationData

UNIT_TOL = 1e-12
CANONICAL_TOL = 1e-10


def sphere_direction(azimuth: float, polar: float) -> np.ndarray:
    """Unit vector (cos az sin pol, sin az sin pol, cos pol)."""
    sp = math.sin(polar)
    return np.array([math.cos(azimuth) * sp, math.sin(azimuth) * sp, math.cos(polar)])


def _unit(v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise NonUnitDirectionError(f"{name} must be a 3-vector, got shape {arr.shape}")
    dev = abs(float(arr @ arr) - 1.0)
    if dev > 2.0 * UNIT_TOL:  # norm^2 tolerance ~ 2x norm tolerance
        raise NonUnitDirectionError(f"{name} has |{name}|^2 - 1 = {dev:.3e}, not a unit vector")
    return arr


@dataclass(frozen=True)
class MeasurementDirections:
    """Unit measurement directions a (first qubit) and b (second qubit)."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in ("a", "b"):
            arr = _unit(getattr(self, name), name).copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_angles(cls, theta1: float, theta2: float, theta3: float, theta4: float):
        """b from spherical angles (theta1, theta2), a from (theta3, theta4)."""
        return cls(a=sphere_direction(theta3, theta4), b=sphere_direction(theta1, theta2))


def objective_f(corr: CorrelationData, dirs) -> float:
    """Evaluate f(a, b); ``dirs`` is a MeasurementDirections or an (a, b) pair."""
    if isinstance(dirs, MeasurementDirections):
        a, b = dirs.a, dirs.b
    else:
        a, b = dirs
        a = _unit(a, "a")
        b = _unit(b, "b")
    yb = corr.y @ b
    xa = corr.x @ a
    atb = a @ (corr.T @ b)
    return 1.0 + yb * yb + xa * xa + atb * atb


def canonical_deviation(corr: CorrelationData) -> float:
    """Largest entry that the canonical zero pattern requires to vanish.

    The pattern is x2 = y2 = 0 and T12 = T21 = T23 = T32 = 0 (1-indexed
    Bloch components), i.e. the middle row and column of T are zero off the
    diagonal and the middle Bloch components vanish.
    """
    t = corr.T
    return float(
        max(abs(corr.x[1]), abs(corr.y[1]), abs(t[0, 1]), abs(t[1, 0]), abs(t[1, 2]), abs(t[2, 1]))
    )


def require_canonical(corr: CorrelationData, tol: float = CANONICAL_TOL) -> None:
    dev = canonical_deviation(corr)
    if dev > tol:
        raise NotCanonicalFormError(f"canonical zero pattern violated by {dev:.3e} (tolerance {tol:.0e})")


@dataclass(frozen=True)
class ObjectiveCoefficients:
    """Coefficients of f at fixed a over the unit sphere of b.

    f(b) = m0 + m13 b1 b3 + m12 b1 b2 + m23 b2 b3 + m22 b2^2 + m33 b3^2,
    with the b1^2 contribution absorbed into m0 via b1^2 = 1 - b2^2 - b3^2.
    The b3^2 coefficient cannot be absorbed as well, so it is carried
    explicitly; without it no constant-plus-four-cross-terms form can
    reproduce f for general canonical correlation data.
    """

    m0: float
    m12: float
    m13: float
    m22: float
    m23: float
    m33: float

    def evaluate(self, b) -> float:
        b = np.asarray(b, dtype=float)
        return float(
            self.m0
            + self.m13 * b[0] * b[2]
            + self.m12 * b[0] * b[1]
            + self.m23 * b[1] * b[2]
            + self.m22 * b[1] * b[1]
            + self.m33 * b[2] * b[2]
        )


def objective_coefficients(corr: CorrelationData, a) -> ObjectiveCoefficients:
    """Expand f(a, .) over unit b for canonical correlation data.

    Requires the canonical zero pattern; raises NotCanonicalFormError
    otherwise. The expansion is exact: for every unit b,
    ``coeffs.evaluate(b) == objective_f(corr, (a, b))`` up to rounding.
    """
    require_canonical(corr)
    a = _unit(a, "a")
    t = corr.T
    y1, y3 = corr.y[0], corr.y[2]
    w1 = a[0] * t[0, 0] + a[2] * t[2, 0]  # coefficient of b1 in a.Tb
    w3 = a[0] * t[0, 2] + a[2] * t[2, 2]  # coefficient of b3 in a.Tb
    w2 = a[1] * t[1, 1]                   # coefficient of b2 in a.Tb
    xa = corr.x @ a
    p1 = y1 * y1 + w1 * w1
    p2 = w2 * w2
    p3 = y3 * y3 + w3 * w3
    return ObjectiveCoefficients(
        m0=1.0 + xa * xa + p1,
        m12=2.0 * w2 * w1,
        m13=2.0 * (y1 * y3 + w1 * w3),
        m22=p2 - p1,
        m23=2.0 * w2 * w3,
        m33=p3 - p1,
    )


def rank2_lambda_max(u, v) -> tuple[float, np.ndarray]:
    """Top eigenvalue and a unit eigenvector of u u' + v v'.

    lambda_max = (|u|^2 + |v|^2 + sqrt((|u|^2 - |v|^2)^2 + 4 (u.v)^2)) / 2.

    The eigenvector is alpha u + beta v with (alpha, beta) the top
    eigenvector of [[u.u, u.v], [u.v, v.v]]. When the top eigenvalue is
    degenerate (|u| = |v|, u.v = 0) the normalized u + v direction is
    returned, falling back to u and finally to e3 when everything vanishes.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    p = float(u @ u)
    r = float(v @ v)
    q = float(u @ v)
    s = math.hypot(p - r, 2.0 * q)
    lam = 0.5 * (p + r + s)

    if s > 1e-14 * (p + r):
        n1 = q * q + (lam - p) ** 2
        n2 = (lam - r) ** 2 + q * q
        alpha, beta = (q, lam - p) if n1 >= n2 else (lam - r, q)
        w = alpha * u + beta * v
        return lam, w / np.linalg.norm(w)

    # degenerate or zero form: every span direction achieves lam
    w = u + v
    n = np.linalg.norm(w)
    if n > 0.0:
        return lam, w / n
    nu = np.linalg.norm(u)
    if nu > 0.0:
        return lam, u / nu
    return lam, np.array([0.0, 0.0, 1.0])


def reduced_over_a(corr: CorrelationData, b) -> tuple[float, np.ndarray]:
    """Exact maximum of f(., b) over unit a, with the maximizing a.

    g(b) = 1 + (y.b)^2 + lambda_max(x x' + (Tb)(Tb)').
    """
    b = _unit(b, "b")
    yb = float(corr.y @ b)
    lam, a = rank2_lambda_max(corr.x, corr.T @ b)
    return 1.0 + yb * yb + lam, a


def reduced_over_a_batch(corr: CorrelationData, bs: np.ndarray) -> np.ndarray:
    """Vectorized g(b) over the rows of ``bs`` (values only, no maximizers)."""
    yb2 = (bs @ corr.y) ** 2
    tb = bs @ corr.T.T
    p = float(corr.x @ corr.x)
    r = np.einsum("ij,ij->i", tb, tb)
    q = tb @ corr.x
    lam = 0.5 * (p + r + np.sqrt((p - r) ** 2 + 4.0 * q * q))
    return 1.0 + yb2 + lam
