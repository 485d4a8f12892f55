"""Dense complex matrix core: characteristic polynomial, resolvent trace,
a brute-force eigenvalue oracle, and the diagonal homotopy.

Matrices are plain ``numpy`` arrays of ``complex128``; every public function
validates its input through :func:`as_matrix` (square, finite, n >= 1).
All functions are pure and keep no global state.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    CoefficientOverflowError,
    OracleConvergenceError,
    SpectrumProximityError,
)

ORACLE_MAX_DIM = 20

_ABERTH_MAX_ITER = 500
_ABERTH_STEP_TOL = 1e-13
_POLISH_STEPS = 2
_CLUSTER_REL_TOL = 1e-7
_RESIDUAL_REL_TOL = 1e-8
_PIVOT_REL_TOL = 1e-12


def as_matrix(a) -> np.ndarray:
    """Coerce to a square, finite complex128 array (n >= 1)."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def max_entry_norm(a) -> float:
    """Max absolute entry, the norm used throughout the package."""
    return float(np.max(np.abs(np.asarray(a))))


@dataclass(frozen=True)
class MonicPolynomial:
    """p(z) = z^n + a_1 z^(n-1) + ... + a_n, stored as (a_1, ..., a_n)."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("monic polynomial needs degree >= 1")
        if not all(cmath.isfinite(c) for c in coeffs):
            raise ValueError("polynomial coefficients must be finite")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def __call__(self, z):
        p, _ = self.eval_with_derivative(z)
        return p

    def eval_with_derivative(self, z):
        """Horner evaluation of (p(z), p'(z)); z may be scalar or ndarray."""
        return _poly_eval_pair(np.asarray(self.coefficients), z)


def _poly_eval_pair(coeffs: np.ndarray, z):
    p = np.ones_like(z, dtype=complex) if isinstance(z, np.ndarray) else 1.0 + 0j
    dp = np.zeros_like(z, dtype=complex) if isinstance(z, np.ndarray) else 0.0 + 0j
    for c in coeffs:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _canonical_key(z: complex):
    return (z.real, z.imag)


@dataclass(frozen=True)
class SpectrumMultiset:
    """Unordered multiset of eigenvalues, kept in a canonical (re, im) sort."""

    values: tuple[complex, ...]

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        if not vals:
            raise ValueError("spectrum must contain at least one value")
        if not all(cmath.isfinite(v) for v in vals):
            raise ValueError("spectrum values must be finite")
        object.__setattr__(self, "values", tuple(sorted(vals, key=_canonical_key)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex)


def characteristic_polynomial(a) -> MonicPolynomial:
    """Coefficients of det(zI - A) by the Faddeev-LeVerrier recurrence."""
    a = as_matrix(a)
    n = a.shape[0]
    identity = np.eye(n, dtype=complex)
    coeffs = np.empty(n, dtype=complex)
    prod = np.zeros((n, n), dtype=complex)  # A @ M_{k-1}
    c = 1.0 + 0j
    for k in range(1, n + 1):
        m = prod + c * identity
        prod = a @ m
        c = -np.trace(prod) / k
        coeffs[k - 1] = c
    if not np.all(np.isfinite(coeffs)):
        raise CoefficientOverflowError("coefficient overflow")
    return MonicPolynomial(tuple(coeffs))


def _shifted_lu(a: np.ndarray, z: complex):
    """LU of (zI - A) with a pivot guard against z near the spectrum."""
    z = complex(z)
    if not cmath.isfinite(z):
        raise ValueError("shift point must be finite")
    n = a.shape[0]
    shifted = z * np.eye(n, dtype=complex) - a
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lu, piv = scipy.linalg.lu_factor(shifted, check_finite=False)
    if np.min(np.abs(np.diagonal(lu))) <= _PIVOT_REL_TOL * max_entry_norm(a) * n:
        raise SpectrumProximityError("z too close to spectrum")
    return lu, piv


def resolvent_log_derivative(a, z) -> complex:
    """p'(z)/p(z) evaluated as trace((zI - A)^-1) from one LU factorization."""
    a = as_matrix(a)
    lu_piv = _shifted_lu(a, z)
    inv = scipy.linalg.lu_solve(lu_piv, np.eye(a.shape[0], dtype=complex),
                                check_finite=False)
    return complex(np.trace(inv))


def _logdet_phase(a: np.ndarray, z: complex) -> float:
    """arg det(zI - A), as an unreduced sum of pivot phases (mod 2*pi free)."""
    lu, piv = _shifted_lu(a, z)
    swaps = int(np.count_nonzero(piv != np.arange(piv.shape[0])))
    phase = float(np.sum(np.angle(np.diagonal(lu))))
    if swaps % 2:
        phase += np.pi
    return phase


def _aberth(coeffs: np.ndarray) -> np.ndarray:
    """Simultaneous Aberth-Ehrlich iteration for all roots of a monic poly."""
    n = coeffs.shape[0]
    radius = 1.0 + float(np.max(np.abs(coeffs)))
    # Equal spacing with a fixed rotation so the starts avoid the axes.
    z = radius * np.exp(1j * (2.0 * np.pi * np.arange(n) / n + 0.4))
    tol = _ABERTH_STEP_TOL * (1.0 + radius)
    for _ in range(_ABERTH_MAX_ITER):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        if np.any(diff == 0):
            collided = np.nonzero(np.any(diff == 0, axis=1))[0]
            z = z.copy()
            z[collided] += 1e-9 * (1.0 + radius) * np.exp(
                2j * np.pi * collided / n + 0.7j)
            continue
        p, dp = _poly_eval_pair(coeffs, z)
        stuck = (dp == 0) & (p != 0)
        if np.any(stuck):
            z = np.where(stuck, z + 1e-6 * (1.0 + np.abs(z)) * np.exp(0.3j), z)
            continue
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(p == 0, 0.0, p / np.where(dp == 0, 1.0, dp))
            s = (1.0 / diff).sum(axis=1)
        denom = 1.0 - newton * s
        denom = np.where(denom == 0, 1.0, denom)
        step = newton / denom
        z = z - step
        if float(np.max(np.abs(step))) < tol:
            return z
    raise OracleConvergenceError("oracle did not converge")


def _newton_polish(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """A few guarded Newton steps; a step is kept only if it shrinks |p|."""
    for _ in range(_POLISH_STEPS):
        p, dp = _poly_eval_pair(coeffs, roots)
        safe = dp != 0
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = np.where(safe, roots - p / np.where(safe, dp, 1.0), roots)
        cand = np.where(np.isfinite(cand), cand, roots)
        pc, _ = _poly_eval_pair(coeffs, cand)
        roots = np.where(np.abs(pc) <= np.abs(p), cand, roots)
    return roots


def _cluster_roots(roots: np.ndarray) -> np.ndarray:
    """Average near-coincident roots and repeat them (multiplicity report)."""
    n = roots.shape[0]
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            tol = _CLUSTER_REL_TOL * (1.0 + max(abs(roots[i]), abs(roots[j])))
            if abs(roots[i] - roots[j]) < tol:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = np.empty(n, dtype=complex)
    pos = 0
    for members in groups.values():
        mean = roots[members].mean()
        out[pos:pos + len(members)] = mean
        pos += len(members)
    return out


def eigenvalues_oracle(a) -> SpectrumMultiset:
    """All n roots of the characteristic polynomial, with multiplicity.

    Brute-force ground truth for the counting routes: Aberth-Ehrlich
    iteration on the Faddeev-LeVerrier coefficients, two guarded Newton
    polish steps, then clustering of near-coincident roots. Guarded to
    n <= 20; each returned root satisfies
    |p(root)| <= 1e-8 * max(1, max|coefficient|).
    """
    a = as_matrix(a)
    n = a.shape[0]
    if n > ORACLE_MAX_DIM:
        raise ValueError(f"oracle is limited to n <= {ORACLE_MAX_DIM}, got n = {n}")
    poly = characteristic_polynomial(a)
    coeffs = np.asarray(poly.coefficients)
    roots = _aberth(coeffs)
    roots = _newton_polish(coeffs, roots)
    roots = _cluster_roots(roots)
    residual_bound = _RESIDUAL_REL_TOL * max(1.0, float(np.max(np.abs(coeffs))))
    p, _ = _poly_eval_pair(coeffs, roots)
    if float(np.max(np.abs(p))) > residual_bound:
        raise OracleConvergenceError("oracle did not converge")
    return SpectrumMultiset(tuple(roots))


def homotopy_member(a, t: float) -> np.ndarray:
    """A_0 + t (A - A_0) where A_0 is the diagonal part of A; t in [0, 1]."""
    a = as_matrix(a)
    if not 0.0 <= t <= 1.0:
        raise ValueError("parameter out of range")
    d = np.diag(np.diagonal(a))
    return d + t * (a - d)
