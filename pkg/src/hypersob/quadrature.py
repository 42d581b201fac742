"""Gaussian quadrature on [0,1] and [0,inf), and contour extraction of
Taylor coefficients.

Rules are built by Golub-Welsch: the symmetric tridiagonal matrix of the
weight's three-term recurrence is diagonalized, eigenvalues give nodes and
squared first eigenvector components (times the total mass) give weights.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import EigenNoConvergence, NoConvergence


@dataclass(frozen=True)
class QuadRule:
    """Gaussian rule: nodes/weights plus a descriptor of the weight."""

    nodes: np.ndarray
    weights: np.ndarray
    family: str               # "jacobi01" | "laguerre"
    params: tuple             # weight exponents
    support: tuple            # (lo, hi); hi may be inf

    @property
    def exactness(self) -> int:
        return 2 * len(self.nodes) - 1

    def integrate(self, f) -> float:
        return sum(w * f(x) for x, w in zip(self.nodes, self.weights))


def _golub_welsch(diag, offdiag, mass):
    try:
        nodes = np.sort(scipy.linalg.eigh_tridiagonal(
            np.asarray(diag, dtype=float), np.asarray(offdiag, dtype=float),
            eigvals_only=True))
    except np.linalg.LinAlgError as exc:   # pragma: no cover
        raise EigenNoConvergence(str(exc)) from exc
    # Weights via the Christoffel function, 1 / sum_k p_k(x)^2 over the
    # orthonormal polynomials, evaluated by the three-term recurrence.
    # Eigenvector first components lose all relative accuracy for the
    # tiny weights of large rules; this route does not.
    weights = np.empty_like(nodes)
    for i, x in enumerate(nodes):
        p_prev = 0.0
        p = 1.0 / math.sqrt(mass)
        total = p * p
        for k in range(len(nodes) - 1):
            p_next = ((x - diag[k]) * p - (offdiag[k - 1] if k else 0.0)
                      * p_prev) / offdiag[k]
            p_prev, p = p, p_next
            total += p * p
        weights[i] = 1.0 / total
    return nodes, weights


def gauss_jacobi01(N: int, a_exp: float, b_exp: float) -> QuadRule:
    """N-point Gaussian rule for the weight x^a_exp (1-x)^b_exp on [0,1]."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if not (a_exp > -1 and b_exp > -1):
        raise ValueError("weight exponents must exceed -1")
    # recurrence of the weight (1-u)^A (1+u)^B on [-1,1], A=b_exp, B=a_exp
    A, B = float(b_exp), float(a_exp)
    diag = np.empty(N)
    offdiag = np.empty(max(N - 1, 0))
    diag[0] = (B - A) / (A + B + 2)
    for k in range(1, N):
        s = 2 * k + A + B
        diag[k] = (B * B - A * A) / (s * (s + 2))
    if N > 1:
        offdiag[0] = math.sqrt(
            4 * (A + 1) * (B + 1) / ((A + B + 2) ** 2 * (A + B + 3)))
    for k in range(2, N):
        s = 2 * k + A + B
        offdiag[k - 1] = math.sqrt(
            4 * k * (k + A) * (k + B) * (k + A + B) / (s * s * (s * s - 1)))
    mass = math.exp(math.lgamma(A + 1) + math.lgamma(B + 1)
                    - math.lgamma(A + B + 2))   # Beta(a_exp+1, b_exp+1)
    nodes, weights = _golub_welsch(diag, offdiag, mass)
    nodes = (nodes + 1.0) / 2.0                 # affine map to [0,1]
    return QuadRule(nodes, weights, "jacobi01", (float(a_exp), float(b_exp)),
                    (0.0, 1.0))


def gauss_laguerre(N: int, a_exp: float) -> QuadRule:
    """N-point generalized Gauss-Laguerre rule for x^a_exp e^{-x} on
    [0, inf)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if not a_exp > -1:
        raise ValueError("weight exponent must exceed -1")
    a = float(a_exp)
    diag = np.array([2 * k + a + 1 for k in range(N)], dtype=float)
    offdiag = np.array([math.sqrt(k * (k + a)) for k in range(1, N)],
                       dtype=float)
    mass = math.gamma(a + 1)
    nodes, weights = _golub_welsch(diag, offdiag, mass)
    return QuadRule(nodes, weights, "laguerre", (a,), (0.0, math.inf))


def taylor_coeff_contour(f, n: int, radius: float, M: int) -> complex:
    """Trapezoidal approximation of the n-th Taylor coefficient of f,
    (1/2 pi i) oint |z|=radius z^{-n-1} f(z) dz, with M sample points."""
    if M < 4:
        raise ValueError("M must be >= 4")
    acc = 0j
    for m in range(M):
        z = radius * cmath.exp(2j * cmath.pi * m / M)
        acc += f(z) / z ** n
    return acc / M


def taylor_coeff_adaptive(f, n: int, radius: float,
                          tol: float = 1e-12, max_points: int = 4096) -> complex:
    """Contour coefficient with the point count doubled until two successive
    answers agree to ``tol`` (absolute, relative to magnitude)."""
    M = 64
    prev = taylor_coeff_contour(f, n, radius, M)
    while M < max_points:
        M *= 2
        cur = taylor_coeff_contour(f, n, radius, M)
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise NoConvergence(
        f"contour coefficient did not stabilize with {max_points} points")
