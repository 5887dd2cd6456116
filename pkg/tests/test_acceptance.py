"""Acceptance gate: one test per criterion, at the stated tolerances.

A summary line per criterion is printed at the end of the run.
"""
import math
from fractions import Fraction

import numpy as np
import pytest

from ep4.canonical import (
    PerturbedJordan4,
    ReducedParams,
    from_reduced,
    realize_matrix,
    to_reduced,
)
from ep4.domain import (
    DomainPoint,
    KappaParam,
    PointClass,
    alpha_interval,
    in_domain_by_intervals,
    is_physical,
)
from ep4.epn import characteristic_polynomial, jordan_matrix, to_avatar, transition_matrix
from ep4.metric import build_metric, dyson_map, hermitize, quasi_hermiticity_residual
from ep4.models import bh_hamiltonian, bh_spectrum
from ep4.polyroots import cubic_roots_cardano, quartic_roots
from ep4.secular import RealityVerdict, SecularQuartic, reality_test, stationary_profile

S2 = math.sqrt(2.0)


def criterion(number, title):
    return pytest.mark.criterion(number, title)


@criterion(1, "toy model (-24, -10, 15) is inside with roots -4, -1, 2, 3")
def test_c01_toy_model(record_property):
    p = DomainPoint(-24.0, -10.0, 15.0)
    assert is_physical(p) is PointClass.INSIDE
    rs = quartic_roots(p.quartic().poly())
    assert rs.all_real_distinct
    roots = np.array(rs.real_roots)
    s = p.quartic()
    res = max(abs(s(r)) for r in roots)
    err = np.max(np.abs(roots - [-4, -1, 2, 3]))
    record_property("max|S(root)|", f"{res:.1e}")
    record_property("root err", f"{err:.1e}")
    assert res < 1e-10 and err < 1e-9
    # independent factorization oracle
    assert np.allclose(np.poly([-4, -1, 2, 3]), [1, 0, -15, 10, 24])


@criterion(2, "beta = 0 alpha-interval is (-9, 0) and its ends flip the verdict")
def test_c02_beta_zero():
    iv = alpha_interval(KappaParam(1.0), 0.0)
    assert (iv.lower, iv.upper) == (-9.0, 0.0)
    cls = lambda a: is_physical(DomainPoint(a, 0.0, 6.0))
    assert cls(-9 + 1e-6) is PointClass.INSIDE
    assert cls(-9 - 1e-6) is PointClass.OUTSIDE
    assert cls(-1e-6) is PointClass.INSIDE
    assert cls(1e-6) is PointClass.OUTSIDE
    assert cls(-9.0) is PointClass.BOUNDARY and cls(0.0) is PointClass.BOUNDARY


@criterion(3, "beta = 8 kappa^3 degenerates the alpha-interval to 3")
def test_c03_extreme_beta(record_property):
    iv = alpha_interval(KappaParam(1.0), 8.0)
    assert iv.is_degenerate
    record_property("|bound-3|", f"{abs(iv.lower - 3):.1e}")
    assert abs(iv.lower - 3) < 1e-10 and abs(iv.upper - 3) < 1e-10
    prof = stationary_profile(SecularQuartic(3.0, 8.0, 6.0))
    pts = sorted(prof.points)
    # listed with multiplicity: -1 twice, then 2
    assert np.max(np.abs(np.array(pts) - [-1, -1, 2])) < 1e-9
    # S' = 4 (E + 1)^2 (E - 2), checked through the closed-form cubic solver
    # closed forms lose half the digits at a double root
    closed = sorted(z.real for z in cubic_roots_cardano([-8.0, -12.0, 0.0, 4.0]))
    assert np.allclose(closed, [-1, -1, 2], atol=1e-6)


@criterion(4, "asymptotic alpha-interval ends agree to O(delta^4) and O(delta^6)")
def test_c04_asymptotics(record_property):
    deltas = [0.05, 0.1, 0.2]
    lo_c, hi_c = [], []
    for d in deltas:
        iv = alpha_interval(KappaParam(1.0), d * d)
        lo_c.append(abs(iv.lower - (-9 + math.sqrt(3) * d * d)) / d**4)
        hi_c.append(abs(iv.upper - d**4 / 24) / d**6)
    record_property("C_lower", f"{max(lo_c):.3g}")
    record_property("C_upper", f"{max(hi_c):.3g}")
    assert max(lo_c) < 5
    assert max(hi_c) < 5


@criterion(5, "no physical alpha once |beta| >= 8 kappa^3 + 1e-6")
def test_c05_beta_bound():
    gamma = 6.0
    betas = np.concatenate([8 + 1e-6 + np.geomspace(1e-9, 50, 60), [8 + 1e-6]])
    alphas = np.concatenate([np.linspace(-200, 200, 201), np.linspace(2.9, 3.1, 101)])
    for b in np.concatenate([betas, -betas]):
        for a in alphas:
            assert is_physical(DomainPoint(a, b, gamma)) is not PointClass.INSIDE
            assert not in_domain_by_intervals(DomainPoint(a, b, gamma))


@criterion(6, "det(P - eta) equals the reduced quartic on 10^4 random samples")
def test_c06_char_poly(record_property):
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(10_000):
        a, b, c, x, y, z = rng.uniform(-5, 5, 6)
        for lam in (0.01, 0.1, 1.0):
            p = PerturbedJordan4(lam, a, b, c, x, y, z)
            r = to_reduced(p)
            assert r.alpha == pytest.approx(a - z * c, rel=1e-12, abs=1e-12)
            coeffs = characteristic_polynomial(realize_matrix(p))
            got = [coeffs[k] / lam**k for k in range(5)]
            want = [1.0, 0.0, -r.gamma, -r.beta, -r.alpha]
            for g, w in zip(got, want):
                err = abs(g - w) / max(1.0, abs(w))
                worst = max(worst, err)
    record_property("max rel err", f"{worst:.1e}")
    assert worst < 1e-9


@criterion(7, "eigenvalues at lambda/2 are half those at lambda")
def test_c07_unfolding(record_property):
    rng = np.random.default_rng(7)
    worst = 0.0
    cases = [from_reduced(ReducedParams(-24.0, -10.0, 15.0), 0.1)]
    for _ in range(2000):
        cases.append(PerturbedJordan4(rng.choice([0.01, 0.1, 1.0]), *rng.uniform(-5, 5, 6)))
    for p in cases:
        half = PerturbedJordan4(p.lam / 2, p.a, p.b, p.c, p.x, p.y, p.z)
        e1 = 0.5 * np.linalg.eigvals(realize_matrix(p))
        e2 = np.linalg.eigvals(realize_matrix(half))
        d = np.abs(e1[:, None] - e2[None, :])
        worst = max(worst, d.min(axis=0).max(), d.min(axis=1).max())
    record_property("max err", f"{worst:.1e}")
    assert worst < 1e-8


@criterion(8, "transition matrices map the BH EPN onto the Jordan block")
def test_c08_transition_matrices(record_property):
    U2 = np.array([[-1j, 1], [1, 0]])
    U3 = np.array([[-2, -2j, 1], [-2j * S2, S2, 0], [2, 0, 0]])
    for U in (U2, U3):
        N = U.shape[0]
        H = bh_hamiltonian(N, 1.0)
        assert np.linalg.norm(H @ U - U @ jordan_matrix(N), 2) < 1e-12
    worst_res, worst_av = 0.0, 0.0
    for N in range(2, 7):
        H = bh_hamiltonian(N, 1.0)
        U = transition_matrix(H, 0.0).U
        worst_res = max(worst_res, np.linalg.norm(H @ U - U @ jordan_matrix(N), 2))
        worst_av = max(worst_av, np.max(np.abs(to_avatar(H, U) - jordan_matrix(N))))
    record_property("max ||HU-UJ||", f"{worst_res:.1e}")
    record_property("max |U^-1HU-J|", f"{worst_av:.1e}")
    assert worst_res < 1e-12 and worst_av < 1e-9


@criterion(9, "BH spectra real iff |g| <= 1 with gaps 2 sqrt(1 - g^2)")
def test_c09_bh_corridor(record_property):
    worst = 0.0
    inside = np.concatenate([np.linspace(-0.99, 0.99, 23), [0.0]])
    outside = [1.01, 1.05, 1.5, 2.0, 3.0]
    for N in range(2, 9):
        for g in inside:
            rep = bh_spectrum(N, g)
            assert rep.all_real_distinct
            gaps = np.diff(rep.real_values)
            worst = max(worst, np.max(np.abs(gaps - 2 * math.sqrt(1 - g * g))))
        for g in outside:
            assert bh_spectrum(N, g).has_complex_pair
            assert bh_spectrum(N, -g).has_complex_pair
    record_property("max gap err", f"{worst:.1e}")
    assert worst < 1e-8


@criterion(10, "metric, Dyson map and Hermitian partner for BH N = 2, 3")
def test_c10_metric(record_property):
    worst = 0.0
    for N in (2, 3):
        mins = []
        for g in (0.0, 0.3, 0.6, 0.9):
            H = bh_hamiltonian(N, g)
            m = build_metric(H)
            bound = 1e-10 * np.linalg.norm(H, 2) * np.linalg.norm(m.theta, 2)
            assert quasi_hermiticity_residual(H, m.theta) < bound
            assert m.min_eigenvalue > 0
            h = hermitize(H, m)
            assert np.linalg.norm(h - h.conj().T, 2) < 1e-9
            spec_h = np.linalg.eigvalsh(0.5 * (h + h.conj().T))
            spec_H = np.sort(np.linalg.eigvals(H).real)
            err = np.max(np.abs(spec_h - spec_H))
            worst = max(worst, err)
            assert err < 1e-9
            om = dyson_map(m)
            assert np.linalg.norm(om.conj().T @ om - m.theta, 2) < 1e-10
            mins.append(m.min_eigenvalue)
        record_property(f"min eig N={N}", "/".join(f"{v:.3g}" for v in mins))
        assert all(b < a for a, b in zip(mins, mins[1:]))
    record_property("max spec err", f"{worst:.1e}")


def _discriminant_oracle(alpha, beta, gamma) -> bool:
    """Four distinct real roots of E^4 - gamma E^2 - beta E - alpha, in exact arithmetic.

    For x^4 + p x^2 + q x + r: disc > 0, p < 0 and 4 r - p^2 < 0.
    """
    p, q, r = -Fraction(gamma), -Fraction(beta), -Fraction(alpha)
    disc = (256 * r**3 - 128 * p**2 * r**2 + 144 * p * q**2 * r - 27 * q**4
            + 16 * p**4 * r - 4 * p**3 * q**2)
    return disc > 0 and p < 0 and 4 * r - p * p < 0


def _in_band(s):
    return any(abs(v) <= 10 * s.band() for v in stationary_profile(s).values)


@criterion(11, "reality test and domain intervals agree with root oracles")
def test_c11_oracle_equivalence(record_property):
    rng = np.random.default_rng(11)
    bad_test, bad_domain, skipped = 0, 0, 0
    for i in range(10_000):
        if i % 2:
            alpha, beta, gamma = rng.uniform(-20, 20, 3)
        else:
            # concentrate half the samples near the physical domain
            gamma = rng.uniform(0.1, 12)
            k = math.sqrt(gamma / 6)
            beta = rng.uniform(-9, 9) * k**3
            alpha = rng.uniform(-10, 1) * k**4
        s = SecularQuartic(alpha, beta, gamma)
        if _in_band(s):
            skipped += 1
            continue
        oracle = _discriminant_oracle(alpha, beta, gamma)
        if (reality_test(s) is RealityVerdict.ALL_REAL_DISTINCT) != oracle:
            bad_test += 1
        inside = is_physical(DomainPoint(alpha, beta, gamma)) is PointClass.INSIDE
        if inside != in_domain_by_intervals(DomainPoint(alpha, beta, gamma)):
            bad_domain += 1
    record_property("discrepancies", bad_test + bad_domain)
    record_property("in band", skipped)
    assert bad_test == 0 and bad_domain == 0
