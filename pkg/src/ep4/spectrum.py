"""Classified eigenvalue sets shared by the model and canonical modules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath
import numpy as np

# eigenvalues of a matrix near an EP split by ~eps**(1/m); merge radius
# for matrix spectra is therefore looser than for polished polynomial roots
MERGE_TOL = 1e-6
REAL_TOL = 1e-9


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues grouped into levels with multiplicities.

    ``levels`` lists the distinct values (cluster means); real levels
    carry an exactly zero imaginary part.  Real levels come first in
    ascending order, followed by the non-real ones sorted by
    (real, imag).
    """

    levels: tuple[complex, ...]
    multiplicity: tuple[int, ...]

    @property
    def eigenvalues(self) -> tuple[complex, ...]:
        out: list[complex] = []
        for v, m in zip(self.levels, self.multiplicity):
            out.extend([v] * m)
        return tuple(out)

    @property
    def all_real(self) -> bool:
        return all(v.imag == 0.0 for v in self.levels)

    @property
    def degenerate(self) -> bool:
        return any(m > 1 for m in self.multiplicity)

    @property
    def all_real_distinct(self) -> bool:
        return self.all_real and not self.degenerate

    @property
    def real_values(self) -> tuple[float, ...]:
        return tuple(v.real for v in self.eigenvalues if v.imag == 0.0)

    @property
    def complex_pairs(self) -> tuple[tuple[complex, complex], ...]:
        """Non-real eigenvalues (Im > 0) paired with their conjugates when present."""
        nonreal = [v for v in self.eigenvalues if v.imag != 0.0]
        pairs = []
        used = [False] * len(nonreal)
        for i, v in enumerate(nonreal):
            if used[i] or v.imag < 0:
                continue
            for j, w in enumerate(nonreal):
                if not used[j] and j != i and abs(w - v.conjugate()) <= MERGE_TOL * max(1.0, abs(v)):
                    used[i] = used[j] = True
                    pairs.append((w, v))
                    break
        return tuple(pairs)

    @property
    def has_complex_pair(self) -> bool:
        return bool(self.complex_pairs)

    def to_json(self) -> dict:
        return {
            "levels": [[v.real, v.imag] for v in self.levels],
            "multiplicity": list(self.multiplicity),
            "all_real": self.all_real,
            "degenerate": self.degenerate,
        }


def classify_spectrum(values: Iterable[complex], merge_tol: float = MERGE_TOL,
                      real_tol: float = REAL_TOL) -> SpectrumReport:
    """Group raw eigenvalues into levels.

    Tolerances are relative to the spectral scale max(1, max |value|).
    A cluster is replaced by its mean, which (by the trace) is far more
    accurate than its individual members when the cluster comes from a
    perturbed Jordan block.
    """
    vals = [complex(v) for v in values]
    if not vals:
        return SpectrumReport((), ())
    scale = max(1.0, max(abs(v) for v in vals))
    order = sorted(range(len(vals)), key=lambda i: (vals[i].real, vals[i].imag))
    clusters: list[list[complex]] = []
    for i in order:
        v = vals[i]
        for c in clusters:
            if any(abs(v - w) <= merge_tol * scale for w in c):
                c.append(v)
                break
        else:
            clusters.append([v])
    levels = []
    for c in clusters:
        mean = sum(c) / len(c)
        if abs(mean.imag) <= real_tol * scale:
            mean = complex(mean.real, 0.0)
        levels.append((mean, len(c)))
    levels.sort(key=lambda t: (t[0].imag != 0.0, t[0].real, t[0].imag))
    return SpectrumReport(tuple(v for v, _ in levels), tuple(m for _, m in levels))


def precise_eigenvalues(matrix: Sequence[Sequence], dps: int = 40) -> list[complex]:
    """Eigenvalues of a matrix given with mpmath-compatible entries.

    Entries may be mpmath numbers computed at the working precision; the
    eigenproblem is solved at ``dps`` decimal digits and the result is
    rounded back to Python complex.
    """
    with mpmath.workdps(dps):
        M = mpmath.matrix([[mpmath.mpmathify(x) for x in row] for row in matrix])
        ev = mpmath.eig(M, left=False, right=False)
        return [complex(v) for v in ev]


def sorted_eigenvalues(H: np.ndarray) -> np.ndarray:
    e = np.linalg.eigvals(H)
    return e[np.lexsort((e.imag, e.real))]
