"""Canonical perturbed Jordan block near an EP4.

    P(lambda) = [[0,            1,            0,           0],
                 [lambda^2 z,   0,            1,           0],
                 [lambda^3 x,   lambda^2 y,   0,           1],
                 [lambda^4 a,   lambda^3 b,   lambda^2 c,  0]]

Writing c = gamma - y - z, b = beta - x, a = alpha - z (y - gamma) - z^2
makes its characteristic polynomial

    eta^4 - lambda^2 gamma eta^2 - lambda^3 beta eta - lambda^4 alpha,

so eta = lambda E with E a root of the secular quartic, independent of lambda.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .secular import SecularQuartic
from .spectrum import SpectrumReport, classify_spectrum


@dataclass(frozen=True)
class PerturbedJordan4:
    lam: float
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0


@dataclass(frozen=True)
class ReducedParams:
    alpha: float
    beta: float
    gamma: float
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def quartic(self) -> SecularQuartic:
        return SecularQuartic(self.alpha, self.beta, self.gamma)


def realize_matrix(p: PerturbedJordan4) -> np.ndarray:
    """The real 4x4 matrix P(lambda)."""
    l = p.lam
    l2, l3, l4 = l * l, l**3, l**4
    return np.array([
        [0.0, 1.0, 0.0, 0.0],
        [l2 * p.z, 0.0, 1.0, 0.0],
        [l3 * p.x, l2 * p.y, 0.0, 1.0],
        [l4 * p.a, l3 * p.b, l2 * p.c, 0.0],
    ])


def to_reduced(p: PerturbedJordan4) -> ReducedParams:
    gamma = p.c + p.y + p.z
    beta = p.b + p.x
    alpha = p.a + p.z * (p.y - gamma) + p.z**2
    return ReducedParams(alpha, beta, gamma, p.x, p.y, p.z)


def from_reduced(r: ReducedParams, lam: float = 1.0) -> PerturbedJordan4:
    c = r.gamma - r.y - r.z
    b = r.beta - r.x
    a = r.alpha - r.z * (r.y - r.gamma) - r.z**2
    return PerturbedJordan4(lam, a, b, c, r.x, r.y, r.z)


def reduced_char_poly(r: ReducedParams, lam: float) -> np.ndarray:
    """Coefficients of eta^4 - lam^2 gamma eta^2 - lam^3 beta eta - lam^4 alpha, highest first."""
    return np.array([1.0, 0.0, -lam**2 * r.gamma, -lam**3 * r.beta, -lam**4 * r.alpha])


@dataclass(frozen=True)
class UnfoldedSpectrum:
    """Eigenvalues eta of P(lambda) and the rescaled energies E = eta / lambda.

    ``energies`` is None at lambda = 0, where the EP4 leaves only eta = 0.
    """

    lam: float
    eta: SpectrumReport
    energies: SpectrumReport | None


def spectrum(p: PerturbedJordan4) -> UnfoldedSpectrum:
    M = realize_matrix(p)
    eta = np.linalg.eigvals(M)
    if p.lam == 0.0:
        return UnfoldedSpectrum(0.0, classify_spectrum(eta), None)
    E = eta / p.lam
    rep_E = classify_spectrum(E)
    # classify once, on the lambda-free energies, and scale back
    rep_eta = SpectrumReport(tuple(v * p.lam for v in rep_E.levels), rep_E.multiplicity)
    return UnfoldedSpectrum(p.lam, rep_eta, rep_E)
