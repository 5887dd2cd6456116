"""The physical domain D of (alpha, beta, gamma): all four secular roots real and distinct.

With gamma = 6 kappa^2 (kappa > 0), the domain is

    -8 kappa^3 < beta < 8 kappa^3,
    max(T(E_-), T(E_+)) < alpha < T(E_0),

where E_- < E_0 < E_+ are the zeros of S'(E) = 4E^3 - 12 kappa^2 E - beta
and T(E) = E^4 - gamma E^2 - beta E.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TextIO

import numpy as np

from .errors import BetaOutOfRange, DeltaTooLarge, InvalidGrid, NonpositiveGamma
from .polyroots import cubic_roots
from .secular import DEGENERACY_TOL, RealityVerdict, SecularQuartic, reality_test

DELTA_MAX = 0.3


class EndpointKind(str, enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    DEGENERATE = "degenerate"


class PointClass(str, enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class DomainPoint:
    alpha: float
    beta: float
    gamma: float

    def quartic(self) -> SecularQuartic:
        return SecularQuartic(self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class DomainInterval:
    lower: float
    upper: float
    lower_kind: EndpointKind = EndpointKind.OPEN
    upper_kind: EndpointKind = EndpointKind.OPEN

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval: {self.lower} > {self.upper}")

    @classmethod
    def open(cls, lower: float, upper: float) -> "DomainInterval":
        return cls(lower, upper)

    @classmethod
    def point(cls, value: float) -> "DomainInterval":
        return cls(value, value, EndpointKind.DEGENERATE, EndpointKind.DEGENERATE)

    @property
    def is_degenerate(self) -> bool:
        return self.lower_kind is EndpointKind.DEGENERATE

    @property
    def length(self) -> float:
        return self.upper - self.lower

    def __contains__(self, value: float) -> bool:
        if self.is_degenerate:
            # the merged bound belongs to the boundary, never to open D
            return False
        above = value > self.lower if self.lower_kind is EndpointKind.OPEN else value >= self.lower
        below = value < self.upper if self.upper_kind is EndpointKind.OPEN else value <= self.upper
        return above and below


@dataclass(frozen=True)
class KappaParam:
    kappa: float

    def __post_init__(self):
        if not (self.kappa > 0.0 and math.isfinite(self.kappa)):
            raise NonpositiveGamma(f"kappa must be positive and finite, got {self.kappa}")

    @property
    def gamma(self) -> float:
        return 6.0 * self.kappa**2


def _kappa(k) -> KappaParam:
    return k if isinstance(k, KappaParam) else KappaParam(float(k))


def kappa_of_gamma(gamma: float) -> KappaParam:
    if not gamma > 0.0:
        raise NonpositiveGamma(f"gamma must be positive, got {gamma}")
    return KappaParam(math.sqrt(gamma / 6.0))


def beta_interval(kappa) -> DomainInterval:
    k = _kappa(kappa).kappa
    b = 8.0 * k**3
    return DomainInterval.open(-b, b)


def _exact_T(s: SecularQuartic, E: float) -> float:
    # T is stationary at E, so the only error left is rounding in the evaluation
    e, g, b = Fraction(E), Fraction(s.gamma), Fraction(s.beta)
    return float(e**4 - g * e**2 - b * e)


def alpha_interval(kappa, beta: float) -> DomainInterval:
    """Open alpha-range of D at fixed (kappa, beta).

    At |beta| = 8 kappa^3 the two upper stationary points merge and the
    interval degenerates to a single value.
    """
    kp = _kappa(kappa)
    k = kp.kappa
    bmax = 8.0 * k**3
    if abs(beta) > bmax:
        raise BetaOutOfRange(f"|beta| = {abs(beta)} exceeds 8 kappa^3 = {bmax}")
    s = SecularQuartic(0.0, beta, kp.gamma)
    pts = cubic_roots(s.derivative()).real_roots
    if len(pts) != 3:
        # rounding turned the merged pair complex; only possible at |beta| ~ 8 kappa^3
        pts = (-k, -k, 2 * k) if beta > 0 else (-2 * k, k, k)
    lo, mid, hi = pts
    lower = max(_exact_T(s, lo), _exact_T(s, hi))
    upper = _exact_T(s, mid)
    if abs(beta) == bmax or lo == mid or mid == hi or upper <= lower:
        return DomainInterval.point(0.5 * (lower + upper) if upper > lower else upper)
    return DomainInterval.open(lower, upper)


def alpha_interval_asymptotic(kappa, delta: float) -> DomainInterval:
    """Leading-order alpha-range for beta = delta^2 kappa^3, delta small.

    Approximates :func:`alpha_interval`; the lower end is accurate to
    O(delta^4) and the upper end to O(delta^8) (times kappa^4).
    """
    k = _kappa(kappa).kappa
    if delta < 0.0:
        raise ValueError("delta must be non-negative")
    if delta > DELTA_MAX:
        raise DeltaTooLarge(f"delta = {delta} > {DELTA_MAX}")
    k4 = k**4
    return DomainInterval.open(k4 * (-9.0 + math.sqrt(3.0) * delta**2), k4 * delta**4 / 24.0)


_VERDICT_TO_CLASS = {
    RealityVerdict.ALL_REAL_DISTINCT: PointClass.INSIDE,
    RealityVerdict.DEGENERATE: PointClass.BOUNDARY,
    RealityVerdict.COMPLEX_PAIR_PRESENT: PointClass.OUTSIDE,
}


def is_physical(p: DomainPoint, tol: float = DEGENERACY_TOL) -> PointClass:
    return _VERDICT_TO_CLASS[reality_test(p.quartic(), tol)]


def in_domain_by_intervals(p: DomainPoint) -> bool:
    """Membership through the explicit gamma, beta and alpha bounds."""
    if not p.gamma > 0.0:
        return False
    kp = kappa_of_gamma(p.gamma)
    if p.beta not in beta_interval(kp):
        return False
    return p.alpha in alpha_interval(kp, p.beta)


@dataclass(frozen=True)
class GridSpec:
    """Rectangular (beta, alpha) box sampled at ``n_beta`` x ``n_alpha`` points."""

    beta_min: float
    beta_max: float
    alpha_min: float
    alpha_max: float
    n_beta: int = 101
    n_alpha: int = 101

    def __post_init__(self):
        box = (self.beta_min, self.beta_max, self.alpha_min, self.alpha_max)
        if not all(math.isfinite(v) for v in box):
            raise InvalidGrid("grid bounds must be finite")
        if self.beta_min > self.beta_max or self.alpha_min > self.alpha_max:
            raise InvalidGrid("grid bounds must satisfy min <= max")
        if self.n_beta < 2 or self.n_alpha < 2:
            raise InvalidGrid("grid resolution must be at least 2 per axis")

    @classmethod
    def square(cls, beta_range, alpha_range, resolution: int) -> "GridSpec":
        return cls(beta_range[0], beta_range[1], alpha_range[0], alpha_range[1],
                   resolution, resolution)


@dataclass(frozen=True)
class ScanPoint:
    point: DomainPoint
    verdict: PointClass


def scan_domain(gamma: float, grid: GridSpec, tol: float = DEGENERACY_TOL) -> list[ScanPoint]:
    """Classify every grid point; beta varies slowest, alpha fastest."""
    if not math.isfinite(gamma):
        raise InvalidGrid("gamma must be finite")
    betas = np.linspace(grid.beta_min, grid.beta_max, grid.n_beta)
    alphas = np.linspace(grid.alpha_min, grid.alpha_max, grid.n_alpha)
    out = []
    for b in betas:
        for a in alphas:
            pt = DomainPoint(float(a), float(b), float(gamma))
            out.append(ScanPoint(pt, is_physical(pt, tol)))
    return out


SCAN_COLUMNS = ("alpha", "beta", "gamma", "verdict")


def _g17(x: float) -> str:
    return f"{x:.17g}"


def write_scan_csv(rows: Iterable[ScanPoint], stream: TextIO) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(SCAN_COLUMNS)
    for r in rows:
        p = r.point
        w.writerow([_g17(p.alpha), _g17(p.beta), _g17(p.gamma), r.verdict.value])


def scan_to_csv(rows: Iterable[ScanPoint]) -> str:
    buf = io.StringIO()
    write_scan_csv(rows, buf)
    return buf.getvalue()


def scan_to_json(rows: Iterable[ScanPoint]) -> str:
    recs = [
        {"alpha": r.point.alpha, "beta": r.point.beta, "gamma": r.point.gamma,
         "verdict": r.verdict.value}
        for r in rows
    ]
    return json.dumps({"columns": list(SCAN_COLUMNS), "rows": recs}, indent=1)


def read_scan_csv(stream: TextIO) -> list[ScanPoint]:
    out = []
    for rec in csv.DictReader(stream):
        pt = DomainPoint(float(rec["alpha"]), float(rec["beta"]), float(rec["gamma"]))
        out.append(ScanPoint(pt, PointClass(rec["verdict"])))
    return out
