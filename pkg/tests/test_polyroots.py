import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ep4.errors import DegreeMismatch
from ep4.polyroots import (
    RealPoly,
    count_real_roots,
    cubic_roots,
    cubic_roots_cardano,
    poly_roots,
    quartic_roots,
)

from conftest import random_real_poly

SQ3 = math.sqrt(3.0)


def test_realpoly_trims_and_evaluates_like_power_sum():
    p = RealPoly([1.0, -2.0, 0.5, 0.0, 0.0])
    assert p.degree == 2
    for x in (-3.0, 0.0, 0.7, 11.0):
        assert p(x) == pytest.approx(sum(c * x**k for k, c in enumerate(p.coeffs)))


def test_realpoly_derivatives():
    p = RealPoly([-24.0, -10.0, 15.0, 0.0, 1.0])
    assert p.derivative().coeffs == (-10.0, 30.0, 0.0, 4.0)
    assert p.derivative(2).coeffs == (30.0, 0.0, 12.0)


def test_realpoly_rejects_degree_five():
    with pytest.raises(DegreeMismatch):
        RealPoly([0, 0, 0, 0, 0, 1])


# --- cubic ---------------------------------------------------------------

def test_cubic_three_simple_roots():
    rs = cubic_roots(RealPoly([0.0, -12.0, 0.0, 4.0]))
    assert rs.multiplicity == (1, 1, 1)
    assert rs.real_roots == pytest.approx((-SQ3, 0.0, SQ3), abs=1e-12)


def test_cubic_triple_root_of_monomial():
    rs = cubic_roots(RealPoly([0.0, 0.0, 0.0, 4.0]))
    assert rs.roots == (0j,)
    assert rs.multiplicity == (3,)


def test_cubic_double_root_at_extreme_beta():
    rs = cubic_roots(RealPoly([-8.0, -12.0, 0.0, 4.0]))
    assert rs.multiplicity == (2, 1)
    assert rs.real_roots == pytest.approx((-1.0, -1.0, 2.0), abs=1e-12)


def test_cubic_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        cubic_roots(RealPoly([1.0, 0.0, 1.0]))
    with pytest.raises(DegreeMismatch):
        quartic_roots(RealPoly([1.0, 0.0, 0.0, 1.0]))


@pytest.mark.parametrize("coeffs", [
    [0.0, -12.0, 0.0, 4.0],
    [-8.0, -12.0, 0.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [10.0, -30.0, 0.0, 4.0],
    [-6.0, 11.0, -6.0, 1.0],
])
def test_cardano_agrees_with_companion_path(coeffs):
    ours = sorted(cubic_roots(RealPoly(coeffs)).all_roots, key=lambda z: (z.real, z.imag))
    card = sorted(cubic_roots_cardano(RealPoly(coeffs)), key=lambda z: (round(z.real, 6), z.imag))
    for a, b in zip(ours, card):
        assert abs(a - b) < 1e-7


def test_cardano_agrees_on_random_cubics(rng):
    for _ in range(500):
        cs = random_real_poly(rng, 3)
        ours = np.array(sorted(cubic_roots(RealPoly(cs)).all_roots, key=lambda z: (z.real, z.imag)))
        card = np.array(cubic_roots_cardano(RealPoly(cs)))
        # match as multisets
        for z in card:
            assert np.min(np.abs(ours - z)) < 1e-7 * max(1, abs(z))


# --- quartic -------------------------------------------------------------

def test_quartic_toy_roots_match_factorization_and_eigensolve():
    p = RealPoly([24.0, 10.0, -15.0, 0.0, 1.0])
    rs = quartic_roots(p)
    # (E+4)(E+1)(E-2)(E-3) expanded by hand
    assert np.allclose(np.polymul(np.polymul([1, 4], [1, 1]), np.polymul([1, -2], [1, -3])),
                       [1, 0, -15, 10, 24])
    assert rs.real_roots == pytest.approx((-4.0, -1.0, 2.0, 3.0), abs=1e-12)
    oracle = np.sort(np.roots([1, 0, -15, 10, 24]).real)
    assert np.allclose(rs.real_roots, oracle, atol=1e-12)
    assert rs.all_real_distinct


def test_quartic_fourth_roots_of_unity():
    rs = quartic_roots(RealPoly([-1.0, 0.0, 0.0, 0.0, 1.0]))
    assert rs.real_roots == pytest.approx((-1.0, 1.0))
    nonreal = sorted(rs.nonreal_roots, key=lambda z: z.imag)
    assert nonreal[0] == pytest.approx(-1j, abs=1e-14)
    assert nonreal[1] == pytest.approx(1j, abs=1e-14)


def test_quartic_without_real_roots():
    rs = quartic_roots(RealPoly([1.0, 0.0, 0.0, 0.0, 1.0]))
    assert rs.real_roots == ()
    assert len(rs.nonreal_roots) == 4
    for z in rs.nonreal_roots:
        assert z.conjugate() in rs.nonreal_roots


@pytest.mark.parametrize("coeffs, expected", [
    ([-3.0, -8.0, -6.0, 0.0, 1.0], {-1.0: 3, 3.0: 1}),   # (E+1)^3 (E-3)
    ([9.0, 0.0, -6.0, 0.0, 1.0], {-SQ3: 2, SQ3: 2}),     # (E^2-3)^2
    ([0.0, 0.0, 0.0, 0.0, 1.0], {0.0: 4}),
    ([0.0, 0.0, -6.0, 0.0, 1.0], {0.0: 2, -math.sqrt(6): 1, math.sqrt(6): 1}),
])
def test_quartic_multiple_real_roots(coeffs, expected):
    rs = quartic_roots(RealPoly(coeffs))
    assert rs.all_real
    assert len(rs.roots) == len(expected)
    for root, m in expected.items():
        assert rs.multiplicity_of(root) == m


def test_double_complex_pair():
    rs = quartic_roots(RealPoly([1.0, 0.0, 2.0, 0.0, 1.0]))   # (E^2+1)^2
    assert rs.multiplicity == (2, 2)
    assert {complex(round(z.real, 12), z.imag) for z in rs.roots} == {-1j, 1j}


# --- invariants ----------------------------------------------------------

coef = st.floats(min_value=-20, max_value=20, allow_nan=False, allow_infinity=False)
lead = st.floats(min_value=0.25, max_value=8).flatmap(lambda v: st.sampled_from([v, -v]))


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda d: st.tuples(st.lists(coef, min_size=d, max_size=d), lead)))
def test_roots_reproduce_monic_coefficients(data):
    low, top = data
    p = RealPoly(list(low) + [top])
    rs = poly_roots(p)
    assert rs.degree == p.degree
    rebuilt = np.poly(np.array(rs.all_roots))[::-1]
    monic = np.array(p.monic().coeffs)
    scale = max(1.0, np.max(np.abs(monic)))
    assert np.max(np.abs(rebuilt - monic)) <= 1e-9 * scale


@settings(max_examples=300, deadline=None)
@given(st.lists(coef, min_size=4, max_size=4), lead)
def test_nonreal_roots_come_in_exact_conjugate_pairs(low, top):
    rs = quartic_roots(RealPoly(list(low) + [top]))
    nonreal = list(rs.nonreal_roots)
    assert len(nonreal) % 2 == 0
    for z in nonreal:
        assert z.conjugate() in nonreal


def test_count_real_roots_examples():
    assert count_real_roots(RealPoly([24.0, 10.0, -15.0, 0.0, 1.0])) == 4
    assert count_real_roots(RealPoly([1.0, 0.0, 0.0, 0.0, 1.0])) == 0
    assert count_real_roots(RealPoly([0.0, -12.0, 0.0, 4.0]), (-1.0, 1.0)) == 1


def test_count_real_roots_open_interval_excludes_endpoints():
    p = RealPoly([24.0, 10.0, -15.0, 0.0, 1.0])     # roots -4, -1, 2, 3
    assert count_real_roots(p, (-4.0, 3.0)) == 2
    assert count_real_roots(p, (-4.0, 3.5)) == 3
    assert count_real_roots(p, (-5.0, -1.0)) == 1
    assert count_real_roots(p, (3.0, 2.0)) == 0


def test_count_real_roots_counts_distinct_roots():
    assert count_real_roots(RealPoly([-3.0, -8.0, -6.0, 0.0, 1.0])) == 2
    assert count_real_roots(RealPoly([0.0, 0.0, 0.0, 0.0, 1.0])) == 1


def test_count_real_roots_rejects_zero_poly():
    with pytest.raises(ValueError):
        count_real_roots(RealPoly([0.0]))


def test_sturm_count_agrees_with_root_classification(rng):
    mismatches = 0
    for k in range(10_000):
        deg = 3 + k % 2
        p = RealPoly(random_real_poly(rng, deg))
        rs = poly_roots(p)
        if count_real_roots(p) != len(rs.distinct_real):
            mismatches += 1
    assert mismatches == 0
