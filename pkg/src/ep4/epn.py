"""Exceptional points of order N: Jordan matrices, transition matrices, avatars.

At an EPN the Hamiltonian restricted to the degenerate subspace is
similar to a single Jordan block,

    H U = U J(E),

and the columns of the transition matrix U form a generalized
eigenvector chain  H u_1 = E u_1,  H u_k = E u_k + u_{k-1}.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ChainSolveFailure, NotAnEigenvalue, NotFullEPN, SingularTransition

RANK_TOL = 1e-10
CHAIN_TOL = 1e-9
MAX_DIM = 16


def as_matrix(H) -> np.ndarray:
    """Validate a square, finite, complex matrix and return it as an array."""
    A = np.array(H, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def matrix_to_json(H, **extra) -> str:
    """Row-major JSON with every entry as a ``[re, im]`` pair."""
    A = as_matrix(H)
    rows = [[[float(v.real), float(v.imag)] for v in row] for row in A]
    return json.dumps({"dim": A.shape[0], "matrix": rows, **extra})


def matrix_from_json(text: str) -> np.ndarray:
    """Parse the format written by :func:`matrix_to_json`.

    A bare list of rows is accepted as well; entries may be ``[re, im]``
    pairs or plain real numbers.
    """
    obj = json.loads(text)
    rows = obj["matrix"] if isinstance(obj, dict) else obj
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("matrix must be a list of rows")

    def entry(v):
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            return complex(v)
        if isinstance(v, list) and len(v) == 2 and all(isinstance(t, (int, float)) for t in v):
            return complex(v[0], v[1])
        raise ValueError(f"bad matrix entry {v!r}")

    A = as_matrix([[entry(v) for v in row] for row in rows])
    if isinstance(obj, dict) and "dim" in obj and obj["dim"] != A.shape[0]:
        raise ValueError("declared dim does not match matrix")
    return A


@dataclass(frozen=True)
class JordanSpec:
    dim: int
    eigenvalue: complex = 0.0


def jordan_matrix(spec: JordanSpec | int, eigenvalue: complex = 0.0) -> np.ndarray:
    """J(x): ``x`` on the diagonal, ones on the superdiagonal."""
    if not isinstance(spec, JordanSpec):
        spec = JordanSpec(int(spec), eigenvalue)
    n = spec.dim
    if n < 1:
        raise ValueError("Jordan block dimension must be >= 1")
    J = np.eye(n, dtype=complex) * complex(spec.eigenvalue)
    J += np.eye(n, k=1, dtype=complex)
    return J


def numerical_rank(A: np.ndarray, ref: float, tol: float = RANK_TOL) -> int:
    s = np.linalg.svd(A, compute_uv=False)
    return int(np.sum(s > tol * ref))


def rank_sequence(H, E: complex, tol: float = RANK_TOL) -> list[int]:
    """Ranks of (H - E)^k for k = 0, 1, ... until the sequence stalls."""
    H = as_matrix(H)
    n = H.shape[0]
    A = H - complex(E) * np.eye(n)
    norm = max(np.linalg.norm(A, 2), np.finfo(float).tiny)
    # forming H - E already costs rounding of order eps (||H|| + |E|)
    floor = max(norm, np.linalg.norm(H, 2), abs(complex(E)))
    ranks = [n]
    P = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        P = P @ A
        # rounding in A^k scales like ||A||^k, not like the (possibly tiny) ||A^k||
        r = numerical_rank(P, floor * norm ** (k - 1), tol)
        ranks.append(r)
        if r == ranks[-2]:
            break
    return ranks


def epn_order(H, E: complex, tol: float = RANK_TOL) -> int:
    """Size of the largest Jordan block of H at eigenvalue E."""
    ranks = rank_sequence(H, E, tol)
    if ranks[1] == ranks[0]:
        raise NotAnEigenvalue(f"{E} is not an eigenvalue within tolerance")
    # index of nilpotency on the generalized eigenspace
    k = 1
    while k + 1 < len(ranks) and ranks[k + 1] < ranks[k]:
        k += 1
    return k


def algebraic_nullity(H, E: complex, tol: float = RANK_TOL) -> int:
    ranks = rank_sequence(H, E, tol)
    return ranks[0] - ranks[-1]


@dataclass(frozen=True)
class TransitionMatrix:
    U: np.ndarray
    chain_residual: float
    eigenvalue: complex = 0.0

    @property
    def dim(self) -> int:
        return self.U.shape[0]


def chain_residuals(H, U, E: complex) -> np.ndarray:
    """Column norms of H U - U J(E)."""
    H, U = as_matrix(H), as_matrix(U)
    J = jordan_matrix(U.shape[1], E)
    return np.linalg.norm(H @ U - U @ J, axis=0)


def _fix_phase(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    nz = np.flatnonzero(np.abs(v) > 1e-12 * np.max(np.abs(v)))
    lead = v[nz[0]]
    return v * (abs(lead) / lead)


def transition_matrix(H, E: complex, N: int | None = None,
                      tol: float = CHAIN_TOL) -> TransitionMatrix:
    """Solve H U = U J(E) for a single full Jordan block.

    u_1 spans the kernel of H - E (unit norm, first nonzero component
    real positive); each further column is the minimum-norm least-squares
    solution of (H - E) u_k = u_{k-1}.
    """
    H = as_matrix(H)
    n = H.shape[0]
    if N is None:
        N = n
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds {MAX_DIM}")
    order = epn_order(H, E)
    if order != N or N != n:
        raise NotFullEPN(f"Jordan block of size {order} at E={E}; need a single block of size {n}")
    A = H - complex(E) * np.eye(n)
    _, _, Vh = np.linalg.svd(A)
    u = _fix_phase(Vh[-1].conj())
    cols = [u]
    pinvA = np.linalg.pinv(A, rcond=RANK_TOL)
    for _ in range(1, N):
        cols.append(pinvA @ cols[-1])
    U = np.column_stack(cols)
    res = float(np.max(chain_residuals(H, U, E)))
    scale = max(np.linalg.norm(H, 2), 1.0)
    if res > tol * scale:
        raise ChainSolveFailure(f"chain residual {res:.3e} exceeds {tol * scale:.3e}")
    if not np.isfinite(np.linalg.cond(U)) or np.linalg.cond(U) > 1 / (1e3 * np.finfo(float).eps):
        raise ChainSolveFailure("chain vectors are linearly dependent")
    return TransitionMatrix(U, res, complex(E))


def to_avatar(H, U) -> np.ndarray:
    """The isospectral representation P = U^-1 H U."""
    H = as_matrix(H)
    U = as_matrix(U.U if isinstance(U, TransitionMatrix) else U)
    if U.shape != H.shape:
        raise ValueError("H and U must have the same shape")
    cond = np.linalg.cond(U)
    if not math.isfinite(cond) or cond > 1 / (1e3 * np.finfo(float).eps):
        raise SingularTransition(f"transition matrix is singular (cond = {cond:.3e})")
    return np.linalg.solve(U, H @ U)


def characteristic_polynomial(H) -> np.ndarray:
    """Coefficients of det(t I - H), highest degree first, by permutation expansion.

    Each nonzero term of the Leibniz sum is formed exactly as a product
    of matrix entries, so structured sparse matrices with entries of very
    different magnitudes keep full relative accuracy per coefficient.
    Cost grows like N!, which is fine for the dimensions used here.
    """
    H = as_matrix(H)
    n = H.shape[0]
    if n > 8:
        raise ValueError("permutation expansion is limited to N <= 8")
    nonzero = [[j for j in range(n) if H[i, j] != 0 or i == j] for i in range(n)]
    coeffs = [0j] * (n + 1)  # coeffs[k] multiplies t^k

    def walk(row: int, used: int, sign: int, poly: list[complex]):
        if row == n:
            for k, c in enumerate(poly):
                coeffs[k] += sign * c
            return
        for j in nonzero[row]:
            if used >> j & 1:
                continue
            # sign of the permutation from counting inversions with earlier rows
            inv = bin(used >> (j + 1)).count("1")
            s = -sign if inv % 2 else sign
            if row == j:
                # entry of (t I - H): t - h_jj
                h = -H[row, j]
                nxt = [0j] * (len(poly) + 1)
                for k, c in enumerate(poly):
                    nxt[k] += c * h
                    nxt[k + 1] += c
            else:
                h = -H[row, j]
                nxt = [c * h for c in poly]
            walk(row + 1, used | (1 << j), s, nxt)

    walk(0, 0, 1, [1 + 0j])
    out = np.array(coeffs[::-1])
    if np.all(np.isreal(H)):
        out = out.real
    return out
