"""Bose-Hubbard-like benchmark family H_N(g) with exceptional points at g = +-1.

    H_N(g)[j, j]   = i g (2j - N - 1),          j = 1..N
    H_N(g)[j, j+1] = H_N(g)[j+1, j] = sqrt(j (N - j))

For |g| < 1 the spectrum is real and equidistant with spacing
2 sqrt(1 - g^2); at g = +-1 all N levels merge into one Jordan block at 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .spectrum import SpectrumReport, classify_spectrum, precise_eigenvalues


@dataclass(frozen=True)
class BoseHubbardSpec:
    dim: int
    coupling: float

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dim}")


def _spec(spec, g=None) -> BoseHubbardSpec:
    if isinstance(spec, BoseHubbardSpec):
        return spec
    return BoseHubbardSpec(int(spec), float(g))


def bh_hamiltonian(spec: BoseHubbardSpec | int, g: float | None = None) -> np.ndarray:
    s = _spec(spec, g)
    n = s.dim
    j = np.arange(1, n + 1)
    H = np.diag(1j * s.coupling * (2 * j - n - 1)).astype(complex)
    off = np.sqrt(j[:-1] * (n - j[:-1]))
    H += np.diag(off, 1) + np.diag(off, -1)
    return H


def bh_hamiltonian_mp(spec: BoseHubbardSpec | int, g: float | None = None) -> list[list]:
    """Entries of H_N(g) as mpmath numbers at the current working precision."""
    s = _spec(spec, g)
    n = s.dim
    g = mpmath.mpf(s.coupling)
    H = [[mpmath.mpc(0) for _ in range(n)] for _ in range(n)]
    for j in range(1, n + 1):
        H[j - 1][j - 1] = mpmath.mpc(0, g * (2 * j - n - 1))
        if j < n:
            H[j - 1][j] = H[j][j - 1] = mpmath.sqrt(j * (n - j))
    return H


def _dps_for(n: int) -> int:
    # a Jordan block of size n splits by ~10**(-dps/n); keep that well below MERGE_TOL
    return max(40, 8 * n)


def bh_spectrum(spec: BoseHubbardSpec | int, g: float | None = None) -> SpectrumReport:
    """Eigenvalues of H_N(g), classified.

    The eigenvalue condition number grows like (1 - g^2)^(-(N-1)/2) near
    the EP, so double precision loses up to half its digits at N = 8,
    g = 0.99.  The matrix is therefore assembled and diagonalized in
    extended precision.
    """
    s = _spec(spec, g)
    dps = _dps_for(s.dim)
    with mpmath.workdps(dps):
        H = bh_hamiltonian_mp(s)
        ev = precise_eigenvalues(H, dps)
    return classify_spectrum(ev)


def bh_closed_form(spec: BoseHubbardSpec | int, g: float | None = None) -> np.ndarray:
    """E_m = (2m - N + 1) sqrt(1 - g^2), m = 0..N-1 (imaginary for |g| > 1)."""
    s = _spec(spec, g)
    root = np.sqrt(complex(1.0 - s.coupling**2))
    m = np.arange(s.dim)
    return (2 * m - s.dim + 1) * root


@dataclass(frozen=True)
class EPData:
    g_ep: tuple[float, float]
    energy: float
    order: int


def bh_ep_data(N: int) -> EPData:
    if N < 2:
        raise ValueError(f"dimension must be >= 2, got {N}")
    return EPData((-1.0, 1.0), 0.0, N)
