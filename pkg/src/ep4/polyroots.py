"""Roots of real polynomials of degree at most four.

Roots come from the eigenvalues of the companion matrix, followed by
Newton polishing.  Clusters of eigenvalues that belong to one multiple
root are detected and refined on the appropriate derivative, so exact
degeneracies (double or triple roots at an exceptional point) are
reported with their multiplicity instead of as a spurious pair of
nearly-equal or nearly-real values.

A closed-form Cardano solver for cubics and an exact Sturm-sequence
counter are provided as independent cross-checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeMismatch

MAX_DEGREE = 4

# two roots are the same when |r1 - r2| <= DISTINCT_TOL * max(1, |r1|)
DISTINCT_TOL = 1e-8
# a root is real when |Im r| <= REAL_TOL * max(1, |r|)
REAL_TOL = 1e-9

_CLUSTER_RADIUS = 1e-4
_RESIDUAL_FACTOR = 64.0
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class RealPoly:
    """Real polynomial with coefficients in ascending degree order.

    Trailing (highest-degree) zeros are trimmed on construction, so the
    stored leading coefficient is nonzero unless the polynomial is zero.
    """

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]):
        cs = [float(c) for c in coeffs]
        if not all(math.isfinite(c) for c in cs):
            raise ValueError("polynomial coefficients must be finite")
        while cs and cs[-1] == 0.0:
            cs.pop()
        if len(cs) - 1 > MAX_DEGREE:
            raise DegreeMismatch(f"degree {len(cs) - 1} exceeds {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, coeffs: Iterable[float]) -> "RealPoly":
        return cls(list(coeffs)[::-1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "RealPoly":
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [k * c for k, c in enumerate(cs)][1:]
        return RealPoly(cs)

    def monic(self) -> "RealPoly":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        return RealPoly(c / lead for c in self.coeffs)

    def abs_scale(self, x) -> float:
        """Sum of |c_k| |x|^k, the natural size of rounding errors in p(x)."""
        ax = abs(x)
        return float(sum(abs(c) * ax**k for k, c in enumerate(self.coeffs)))


@dataclass(frozen=True)
class RootSet:
    """Distinct roots of a real polynomial with their multiplicities.

    Real roots are stored with an exactly zero imaginary part and come
    first in ascending order; non-real roots follow as conjugate pairs
    (negative imaginary part first) ordered by real part.
    """

    roots: tuple[complex, ...]
    multiplicity: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.multiplicity)

    @property
    def all_roots(self) -> tuple[complex, ...]:
        """Every root repeated according to its multiplicity."""
        out: list[complex] = []
        for r, m in zip(self.roots, self.multiplicity):
            out.extend([r] * m)
        return tuple(out)

    @property
    def real_roots(self) -> tuple[float, ...]:
        """Ascending real roots, repeated according to multiplicity."""
        return tuple(r.real for r in self.all_roots if r.imag == 0.0)

    @property
    def distinct_real(self) -> tuple[float, ...]:
        return tuple(r.real for r in self.roots if r.imag == 0.0)

    @property
    def nonreal_roots(self) -> tuple[complex, ...]:
        return tuple(r for r in self.all_roots if r.imag != 0.0)

    @property
    def all_real(self) -> bool:
        return all(r.imag == 0.0 for r in self.roots)

    @property
    def all_real_distinct(self) -> bool:
        return self.all_real and all(m == 1 for m in self.multiplicity)

    def multiplicity_of(self, value: complex, tol: float = DISTINCT_TOL) -> int:
        for r, m in zip(self.roots, self.multiplicity):
            if abs(r - value) <= tol * max(1.0, abs(r)):
                return m
        return 0


def _as_poly(p) -> RealPoly:
    return p if isinstance(p, RealPoly) else RealPoly(p)


def companion_matrix(p: RealPoly) -> np.ndarray:
    """Frobenius companion matrix of the monic normalization of ``p``."""
    n = p.degree
    if n < 1:
        raise DegreeMismatch("companion matrix needs degree >= 1")
    cs = np.asarray(p.monic().coeffs[:-1])
    C = np.zeros((n, n))
    C[1:, :-1] = np.eye(n - 1)
    C[:, -1] = -cs
    return C


def _newton(p: RealPoly, z: complex, iters: int = 30, max_move: float = 1e-3) -> complex:
    """Polish a root near ``z``, keeping the best iterate by residual.

    Iterates that wander further than ``max_move * max(1, |z|)`` from the
    start are rejected: they belong to a different root.
    """
    dp = p.derivative()
    z0, radius = z, max_move * max(1.0, abs(z))
    best, best_res = z, abs(p(z))
    for _ in range(iters):
        d = dp(z)
        if d == 0:
            break
        step = p(z) / d
        z = z - step
        if abs(z - z0) > radius:
            break
        res = abs(p(z))
        if res < best_res:
            best, best_res = z, res
        if abs(step) <= 4 * _EPS * max(1.0, abs(z)):
            break
    return best


def _is_multiple_root(p: RealPoly, z: complex, m: int) -> bool:
    for k in range(m):
        q = p.derivative(k)
        if abs(q(z)) > _RESIDUAL_FACTOR * _EPS * q.abs_scale(z):
            return False
    return True


def _single_linkage(values: Sequence[complex], radius: float) -> list[list[int]]:
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            scale = max(1.0, abs(values[i]), abs(values[j]))
            if abs(values[i] - values[j]) <= radius * scale:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _solve(p: RealPoly) -> list[complex]:
    eig = np.linalg.eigvals(companion_matrix(p))
    # eigenvalue clusters are candidate multiple roots; the residual test
    # on successive derivatives decides whether they really coincide
    refined: list[complex] = []
    for group in _single_linkage(list(eig), _CLUSTER_RADIUS):
        members = [complex(eig[i]) for i in group]
        m = len(members)
        if m > 1:
            q = p.derivative(m - 1)
            centre = sum(members) / m
            cand = _newton(q, centre) if q.degree >= 1 else centre
            if _is_multiple_root(p, cand, m):
                refined.extend([cand] * m)
                continue
        refined.extend(_newton(p, z) for z in members)
    return refined


def _collect(p: RealPoly, raw: Sequence[complex]) -> RootSet:
    reals: list[float] = []
    upper: list[complex] = []
    n_lower = 0
    for z in raw:
        if abs(z.imag) <= REAL_TOL * max(1.0, abs(z)):
            reals.append(z.real)
        elif z.imag > 0:
            upper.append(z)
        else:
            n_lower += 1
    if n_lower != len(upper):
        # pairing lost to rounding: pair by magnitude of the imaginary part
        nonreal = sorted((z for z in raw if abs(z.imag) > REAL_TOL * max(1.0, abs(z))),
                         key=lambda z: (z.real, abs(z.imag)))
        upper = [complex(z.real, abs(z.imag)) for z in nonreal[::2]]
    reals.sort()
    upper.sort(key=lambda z: (z.real, z.imag))

    roots: list[complex] = []
    mult: list[int] = []
    for r in reals:
        if roots and abs(r - roots[-1].real) <= DISTINCT_TOL * max(1.0, abs(r)):
            k = mult[-1]
            roots[-1] = complex((roots[-1].real * k + r) / (k + 1), 0.0)
            mult[-1] = k + 1
        else:
            roots.append(complex(r, 0.0))
            mult.append(1)
    pairs: list[complex] = []
    pair_mult: list[int] = []
    for z in upper:
        if pairs and abs(z - pairs[-1]) <= DISTINCT_TOL * max(1.0, abs(z)):
            pair_mult[-1] += 1
        else:
            pairs.append(z)
            pair_mult.append(1)
    for z, m in zip(pairs, pair_mult):
        roots.extend([z.conjugate(), z])
        mult.extend([m, m])
    return RootSet(tuple(roots), tuple(mult))


def poly_roots(p) -> RootSet:
    """All roots of a real polynomial of degree 1 to 4."""
    p = _as_poly(p)
    if p.degree < 1:
        raise DegreeMismatch("need a polynomial of degree >= 1")
    return _collect(p, _solve(p))


def quadratic_roots(p) -> RootSet:
    p = _as_poly(p)
    if p.degree != 2:
        raise DegreeMismatch(f"expected degree 2, got {p.degree}")
    return poly_roots(p)


def cubic_roots(p) -> RootSet:
    """Roots of a real cubic, e.g. the derivative of the secular quartic.

    >>> cubic_roots(RealPoly([-8.0, -12.0, 0.0, 4.0]))
    RootSet(roots=((-1+0j), (2+0j)), multiplicity=(2, 1))
    """
    p = _as_poly(p)
    if p.degree != 3:
        raise DegreeMismatch(f"expected degree 3, got {p.degree}")
    return poly_roots(p)


def quartic_roots(p) -> RootSet:
    p = _as_poly(p)
    if p.degree != 4:
        raise DegreeMismatch(f"expected degree 4, got {p.degree}")
    return poly_roots(p)


def cubic_roots_cardano(p) -> list[complex]:
    """Closed-form roots of a real cubic (trigonometric/Cardano branches).

    Returns the three roots as a plain list.  Used as an oracle for
    :func:`cubic_roots`; no clustering or polishing is applied.
    """
    p = _as_poly(p)
    if p.degree != 3:
        raise DegreeMismatch(f"expected degree 3, got {p.degree}")
    d, c, b, a = p.coeffs
    b, c, d = b / a, c / a, d / a
    # depressed cubic t^3 + P t + Q with x = t - b/3
    shift = b / 3.0
    P = c - b * b / 3.0
    Q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (Q / 2.0) ** 2 + (P / 3.0) ** 3
    if P == 0.0 and Q == 0.0:
        ts = [0.0, 0.0, 0.0]
    elif disc < 0.0:
        r = 2.0 * math.sqrt(-P / 3.0)
        arg = (3.0 * Q / (P * r)) if r else 0.0
        phi = math.acos(max(-1.0, min(1.0, arg)))
        ts = [r * math.cos((phi - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        sq = math.sqrt(disc)
        u = math.copysign(abs(-Q / 2.0 + sq) ** (1.0 / 3.0), -Q / 2.0 + sq)
        v = math.copysign(abs(-Q / 2.0 - sq) ** (1.0 / 3.0), -Q / 2.0 - sq)
        t1 = u + v
        re = -t1 / 2.0
        im = math.sqrt(3.0) / 2.0 * (u - v)
        ts = [t1, complex(re, im), complex(re, -im)]
    return [complex(t) - shift for t in ts]


def _fpoly(coeffs: Sequence[Fraction]) -> list[Fraction]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _fderiv(cs: list[Fraction]) -> list[Fraction]:
    return _fpoly([k * c for k, c in enumerate(cs)][1:])


def _frem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    while len(num) >= len(den):
        q = num[-1] / den[-1]
        off = len(num) - len(den)
        for k, c in enumerate(den):
            num[off + k] -= q * c
        num.pop()
        num = _fpoly(num)
    return num


def sturm_sequence(p) -> list[list[Fraction]]:
    """Exact Sturm chain of ``p`` over the rationals (ascending coefficients)."""
    p = _as_poly(p)
    seq = [_fpoly([Fraction(c) for c in p.coeffs])]
    if not seq[0]:
        raise ValueError("zero polynomial")
    d = _fderiv(seq[0])
    while d:
        seq.append(d)
        r = _frem(seq[-2], seq[-1])
        d = [-c for c in r]
    return seq


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _eval_at(seq, x) -> list:
    if x == math.inf or x == -math.inf:
        out = []
        for cs in seq:
            lead = cs[-1]
            deg = len(cs) - 1
            out.append(lead if (x > 0 or deg % 2 == 0) else -lead)
        return out
    fx = Fraction(x)
    out = []
    for cs in seq:
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * fx + c
        out.append(acc)
    return out


def count_real_roots(p, interval: tuple[float, float] | None = None) -> int:
    """Exact number of distinct real roots, optionally in an open interval.

    Coefficients are converted to exact rationals and Sturm's theorem is
    applied, so the count is independent of any floating-point root
    finding.

    >>> count_real_roots(RealPoly([0.0, -12.0, 0.0, 4.0]), (-1.0, 1.0))
    1
    """
    seq = sturm_sequence(p)
    lo, hi = (-math.inf, math.inf) if interval is None else interval
    if not lo < hi:
        return 0
    # Sturm counts roots in the half-open (lo, hi]
    n = _sign_changes(_eval_at(seq, lo)) - _sign_changes(_eval_at(seq, hi))
    if math.isfinite(hi) and _eval_at(seq[:1], hi)[0] == 0:
        n -= 1
    return n
