"""The reduced secular quartic S(E) = E^4 - gamma E^2 - beta E - alpha.

Four distinct real roots exist exactly when S has two negative minima
and a positive maximum between them.  :func:`reality_test` decides this
from the stationary points of S (roots of the cubic S') instead of from
the quartic roots themselves.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .polyroots import RealPoly, cubic_roots

DEGENERACY_TOL = 1e-9


class RealityVerdict(str, enum.Enum):
    ALL_REAL_DISTINCT = "all_real_distinct"
    DEGENERATE = "degenerate"
    COMPLEX_PAIR_PRESENT = "complex_pair_present"


@dataclass(frozen=True)
class SecularQuartic:
    alpha: float
    beta: float
    gamma: float

    def poly(self) -> RealPoly:
        return RealPoly([-self.alpha, -self.beta, -self.gamma, 0.0, 1.0])

    def derivative(self) -> RealPoly:
        return RealPoly([-self.beta, -2.0 * self.gamma, 0.0, 4.0])

    def second_derivative(self) -> RealPoly:
        return RealPoly([-2.0 * self.gamma, 0.0, 12.0])

    def __call__(self, E):
        return self.T(E) - self.alpha

    def T(self, E):
        """S(E) + alpha: the part of S that does not depend on alpha."""
        E2 = E * E
        return E2 * E2 - self.gamma * E2 - self.beta * E

    def band(self, tol: float = DEGENERACY_TOL) -> float:
        """Width of the |S| band inside which a stationary value counts as zero."""
        return tol * max(1.0, abs(self.alpha), abs(self.beta), abs(self.gamma)) ** 2


def stationary_value_T(s: SecularQuartic, E: float) -> float:
    """T(E) = E^4 - gamma E^2 - beta E, so that S(E) = T(E) - alpha."""
    return s.T(E)


@dataclass(frozen=True)
class StationaryProfile:
    """Real stationary points of S and the values of S there.

    With three stationary points the order is
    ``minima[0] <= maximum <= minima[1]``; at |beta| = 8 kappa^3 two of
    them coincide (an inflection point), and both labels are kept.
    """

    minima: tuple[float, ...]
    maximum: float | None
    minima_values: tuple[float, ...]
    maximum_value: float | None

    @property
    def points(self) -> tuple[float, ...]:
        if self.maximum is None:
            return self.minima
        return (self.minima[0], self.maximum, self.minima[1])

    @property
    def values(self) -> tuple[float, ...]:
        if self.maximum_value is None:
            return self.minima_values
        return (self.minima_values[0], self.maximum_value, self.minima_values[1])


def stationary_profile(s: SecularQuartic) -> StationaryProfile:
    roots = cubic_roots(s.derivative())
    if s.gamma <= 0.0:
        # S'' = 12 E^2 - 2 gamma >= 0: S' is monotone with one real zero
        pts = roots.distinct_real[:1]
    else:
        pts = roots.real_roots
    if len(pts) == 3:
        lo, mid, hi = pts
        return StationaryProfile((lo, hi), mid, (s(lo), s(hi)), s(mid))
    (m,) = pts[:1]
    return StationaryProfile((m,), None, (s(m),), None)


def reality_test(s: SecularQuartic, tol: float = DEGENERACY_TOL) -> RealityVerdict:
    """Classify the roots of S by the signs of S at its stationary points.

    ``ALL_REAL_DISTINCT`` needs S < 0 at both minima and S > 0 at the
    maximum, each by more than the degeneracy band.  ``DEGENERATE`` means
    the point sits on the closure of that region with at least one
    stationary value inside the band (a multiple real root and no complex
    pair).
    """
    prof = stationary_profile(s)
    band = s.band(tol)
    if prof.maximum is None:
        # single minimum: four real roots only for the quadruple root E^4
        (m,) = prof.minima
        (v,) = prof.minima_values
        if abs(v) <= band and abs(s.second_derivative()(m)) <= band:
            return RealityVerdict.DEGENERATE
        return RealityVerdict.COMPLEX_PAIR_PRESENT
    lo, hi = prof.minima_values
    top = prof.maximum_value
    if lo < -band and hi < -band and top > band:
        return RealityVerdict.ALL_REAL_DISTINCT
    if lo <= band and hi <= band and top >= -band:
        return RealityVerdict.DEGENERATE
    return RealityVerdict.COMPLEX_PAIR_PRESENT
