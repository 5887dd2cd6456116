"""Metric operators for quasi-Hermitian matrices.

For a diagonalizable H with real spectrum every

    Theta = sum_n c_n |L_n><L_n|,   c_n > 0,

built from left eigenvectors (H^dagger L_n = E_n L_n) satisfies
H^dagger Theta = Theta H.  With Theta = Omega^dagger Omega the Dyson map
Omega turns H into the Hermitian h = Omega H Omega^-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .epn import as_matrix
from .errors import ComplexSpectrum, InvalidMetric, NearDefective

SPACING_TOL = 1e-6
COND_MAX = 1e10
# coincident eigenvalues are harmless when their eigenvectors stay well separated
COND_DIAGONALIZABLE = 1e3
REAL_TOL = 1e-9
RESIDUAL_TOL = 1e-10
HERMITIAN_TOL = 1e-9


@dataclass(frozen=True)
class BiorthogonalSystem:
    """Right vectors are columns of ``right``; left vectors are columns of ``left``.

    Normalization: each left vector has unit norm and <L_n|R_m> = delta_nm.
    """

    right: np.ndarray
    left: np.ndarray
    eigenvalues: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.right * self.eigenvalues) @ self.left.conj().T


@dataclass(frozen=True)
class MetricOperator:
    theta: np.ndarray
    min_eigenvalue: float
    residual: float = 0.0

    @property
    def is_positive(self) -> bool:
        return self.min_eigenvalue > 0.0


def biorthogonal_system(H) -> BiorthogonalSystem:
    H = as_matrix(H)
    n = H.shape[0]
    w, R = np.linalg.eig(H)
    order = np.lexsort((w.imag, w.real))
    w, R = w[order], R[:, order]
    scale = max(1.0, float(np.max(np.abs(w))))
    cond = np.linalg.cond(R)
    if not np.isfinite(cond) or cond > COND_MAX:
        raise NearDefective(f"eigenvector matrix condition {cond:.3e}")
    if n > 1:
        gaps = np.abs(w[:, None] - w[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() <= SPACING_TOL * scale and cond > COND_DIAGONALIZABLE:
            raise NearDefective(f"eigenvalue spacing {gaps.min():.3e} at exceptional-point level")
    # rows of R^-1 are the left vectors (conjugated): <L_n| = (R^-1)[n, :]
    L = np.linalg.inv(R).conj().T
    norms = np.linalg.norm(L, axis=0)
    L = L / norms
    R = R * norms
    return BiorthogonalSystem(R, L, w)


def quasi_hermiticity_residual(H, theta) -> float:
    """|| H^dagger Theta - Theta H || in the spectral norm."""
    H, theta = as_matrix(H), as_matrix(theta)
    return float(np.linalg.norm(H.conj().T @ theta - theta @ H, 2))


def build_metric(H, weights: Sequence[float] | None = None) -> MetricOperator:
    H = as_matrix(H)
    bs = biorthogonal_system(H)
    scale = max(1.0, float(np.max(np.abs(bs.eigenvalues))))
    if np.any(np.abs(bs.eigenvalues.imag) > REAL_TOL * scale):
        raise ComplexSpectrum("spectrum is not real; no positive metric exists")
    n = H.shape[0]
    c = np.ones(n) if weights is None else np.asarray(weights, dtype=float)
    if c.shape != (n,) or np.any(~(c > 0)):
        raise ValueError("weights must be n strictly positive numbers")
    L = bs.left
    theta = (L * c) @ L.conj().T
    theta = 0.5 * (theta + theta.conj().T)
    mins = float(np.linalg.eigvalsh(theta)[0])
    return MetricOperator(theta, mins, quasi_hermiticity_residual(H, theta))


def _check_metric(m: MetricOperator) -> np.ndarray:
    theta = as_matrix(m.theta)
    norm = max(np.linalg.norm(theta, 2), np.finfo(float).tiny)
    if np.linalg.norm(theta - theta.conj().T, 2) > HERMITIAN_TOL * norm:
        raise InvalidMetric("metric is not self-adjoint")
    if np.linalg.eigvalsh(0.5 * (theta + theta.conj().T))[0] <= 0.0:
        raise InvalidMetric("metric is not positive definite")
    return theta


def dyson_map(m: MetricOperator) -> np.ndarray:
    """Positive square root Omega of Theta, so that Omega^dagger Omega = Theta."""
    theta = _check_metric(m)
    w, V = np.linalg.eigh(0.5 * (theta + theta.conj().T))
    return (V * np.sqrt(w)) @ V.conj().T


def hermitize(H, m: MetricOperator) -> np.ndarray:
    """h = Omega H Omega^-1 for the Dyson map of ``m``."""
    H = as_matrix(H)
    theta = _check_metric(m)
    bound = RESIDUAL_TOL * max(1.0, np.linalg.norm(H, 2)) * np.linalg.norm(theta, 2)
    if quasi_hermiticity_residual(H, theta) > bound:
        raise InvalidMetric("metric does not satisfy H^dagger Theta = Theta H for this H")
    omega = dyson_map(m)
    return omega @ np.linalg.solve(omega.T, H.T).T
