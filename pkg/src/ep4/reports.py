"""JSON-ready summaries of library results; the CLI only formats these."""
from __future__ import annotations

import math

import numpy as np

from .domain import DomainPoint, PointClass, alpha_interval, is_physical, kappa_of_gamma
from .metric import build_metric, dyson_map, hermitize
from .models import BoseHubbardSpec, bh_spectrum
from .polyroots import quartic_roots
from .secular import DEGENERACY_TOL, SecularQuartic, stationary_profile


def _c(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def classification_report(alpha: float, beta: float, gamma: float,
                          tol: float = DEGENERACY_TOL) -> dict:
    """Verdict, roots, stationary profile and (inside D) the alpha-interval."""
    for v in (alpha, beta, gamma):
        if not math.isfinite(v):
            raise ValueError("alpha, beta, gamma must be finite")
    pt = DomainPoint(alpha, beta, gamma)
    s = pt.quartic()
    verdict = is_physical(pt, tol)
    roots = quartic_roots(s.poly())
    prof = stationary_profile(s)
    out = {
        "alpha": alpha, "beta": beta, "gamma": gamma,
        "verdict": verdict.value,
        "roots": [_c(r) for r in roots.roots],
        "multiplicity": list(roots.multiplicity),
        "stationary_points": list(prof.points),
        "stationary_values": list(prof.values),
        "alpha_interval": None,
    }
    if verdict is PointClass.INSIDE:
        iv = alpha_interval(kappa_of_gamma(gamma), beta)
        out["alpha_interval"] = [iv.lower, iv.upper]
    return out


def secular_curves(s: SecularQuartic, samples: int = 401,
                   span: tuple[float, float] | None = None) -> list[tuple[float, float, float]]:
    """Sampled (x, S(x), S'(x)) covering every real root and stationary point."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    if span is None:
        pts = list(quartic_roots(s.poly()).real_roots) + list(stationary_profile(s).points)
        lo, hi = (min(pts), max(pts)) if pts else (-1.0, 1.0)
        pad = max(1.0, 0.15 * (hi - lo))
        span = (lo - pad, hi + pad)
    xs = np.linspace(span[0], span[1], samples)
    dS = s.derivative()
    return [(float(x), float(s(x)), float(dS(x))) for x in xs]


def bh_report(N: int, gs) -> list[dict]:
    rows = []
    for g in gs:
        rep = bh_spectrum(BoseHubbardSpec(N, float(g)))
        at_ep = rep.multiplicity == (N,) and abs(abs(g) - 1.0) <= 1e-12
        rows.append({
            "g": float(g),
            "eigenvalues": [_c(v) for v in rep.eigenvalues],
            "real": rep.all_real,
            "ep_order": N if at_ep else None,
        })
    return rows


def g_range(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid, robust to rounding in ``stop``."""
    if step <= 0 or stop < start:
        raise ValueError("need step > 0 and stop >= start")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 12) for k in range(n)]


def hermitize_report(H, weights=None) -> dict:
    H = np.asarray(H, dtype=complex)
    m = build_metric(H, weights)
    omega = dyson_map(m)
    h = hermitize(H, m)
    spec_H = np.sort(np.linalg.eigvals(H).real)
    spec_h = np.linalg.eigvalsh(0.5 * (h + h.conj().T))
    return {
        "dim": H.shape[0],
        "quasi_hermiticity_residual": m.residual,
        "metric_min_eigenvalue": m.min_eigenvalue,
        "dyson_residual": float(np.linalg.norm(omega.conj().T @ omega - m.theta, 2)),
        "hermiticity_residual": float(np.linalg.norm(h - h.conj().T, 2)),
        "isospectrality_error": float(np.max(np.abs(spec_H - spec_h))),
        "theta": [[_c(v) for v in row] for row in m.theta],
        "omega": [[_c(v) for v in row] for row in omega],
        "h": [[_c(v) for v in row] for row in h],
    }
