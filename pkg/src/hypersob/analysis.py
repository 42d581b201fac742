"""Numeric and exact verification of the analytic identities:
generating functions, integral representations, the five-term recurrence,
and zero location.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainViolation, NoConvergence
from .hyper import (GenParams, LParams, PParams, jacobi_J, laguerre_L,
                    lparams_to_gen, poly_L, poly_P, poly_bigL, poly_bigP)
from .polyalg import Polynomial
from .quadrature import gauss_jacobi01, taylor_coeff_adaptive
from .scalars import Scalar, pochhammer


def hyp_series(num: Sequence[float], den: Sequence[float], z: complex,
               rel_tol: float = 1e-18, max_terms: int = 100_000) -> complex:
    """Convergent hypergeometric series at argument z, summed until the
    current term falls below rel_tol relative to the partial sum."""
    num = [float(a) for a in num]
    den = [float(b) for b in den]
    term = 1.0 + 0.0j
    total = term
    for k in range(max_terms):
        term = term * z / (k + 1)
        for a in num:
            term = term * (a + k)
        for b in den:
            term = term / (b + k)
        total += term
        if abs(term) < rel_tol * max(abs(total), 1e-300):
            return total
    raise NoConvergence("hypergeometric series did not meet tolerance")


# -- generating functions -------------------------------------------------

def gf_check_bigP(params: GenParams, x: complex, t: complex, N: int = 40):
    """Compare the closed generating-function form against the truncated
    polynomial sum for the general Jacobi-type family.

    Returns (lhs, rhs_partial, gap).
    """
    if params.p > params.q - 1:
        raise DomainViolation("requires p <= q - 1")
    a = float(params.a)
    if not a > 0:
        raise DomainViolation("requires a > 0")
    # admissibility: some c with |t| < c < 1/2 and |x| < 1/(4c) - 1/2
    if not abs(t) < 1.0 / (4.0 * abs(x) + 2.0):
        raise DomainViolation("(x, t) outside the stated convergence region")
    arg = -4.0 * x * t / (1.0 - t) ** 2
    lhs = (1.0 - t) ** (-a) * hyp_series(
        [a / 2.0, (a + 1.0) / 2.0] + [float(v) for v in params.num],
        [float(v) for v in params.den], arg)
    rhs = 0j
    weight = 1.0
    for n in range(N + 1):
        rhs += weight * complex(poly_bigP(n, params).to_float().eval(x)) * t ** n
        weight = weight * (a + n) / (n + 1)   # (a)_{n+1} / (n+1)!
    return lhs, rhs, abs(lhs - rhs)


def gf_check_bigL(params: GenParams, x: complex, t: complex, N: int = 40):
    """Generating-function check for the general Laguerre-type family."""
    if params.p > params.q + 1:
        raise DomainViolation("requires p <= q + 1")
    if params.p == params.q + 1 and not (abs(t) < 1 and abs(x) < 1):
        raise DomainViolation("p = q + 1 requires t, x in the unit disc")
    lhs = cmath.exp(t) * hyp_series(params.num, params.den, -x * t)
    rhs = 0j
    fact = 1.0
    for n in range(N + 1):
        rhs += complex(poly_bigL(n, params).to_float().eval(x)) * t ** n / fact
        fact *= (n + 1)
    return lhs, rhs, abs(lhs - rhs)


# -- integral representations ---------------------------------------------

def integral_rep_L(n: int, params: LParams, x: complex) -> complex:
    """Contour-integral route to the Laguerre-type polynomial at x."""
    num = [float(d) + 1.0 for d in params.deltas]
    den = [float(params.alpha) + 1.0] + [
        float(k + d) + 1.0 for d, k in zip(params.deltas, params.kappas)]

    def f(zeta):
        return cmath.exp(zeta) * hyp_series(num, den, -x * zeta)

    return math.factorial(n) * taylor_coeff_adaptive(f, n, 1.0)


def integral_rep_P(n: int, params: PParams, x: complex) -> complex:
    """Contour-integral route to the Jacobi-type polynomial at x,
    valid for |x| < 1/4 and alpha + beta > -1."""
    if not abs(x) < 0.25:
        raise DomainViolation("requires |x| < 1/4")
    s = float(params.alpha) + float(params.beta) + 1.0
    if not s > 0:
        raise DomainViolation("requires alpha + beta > -1")
    num = [s / 2.0, (s + 1.0) / 2.0] + [float(d) + 1.0 for d in params.deltas]
    den = [float(params.alpha) + 1.0] + [
        float(k + d) + 1.0 for d, k in zip(params.deltas, params.kappas)]

    def f(zeta):
        arg = -4.0 * x * zeta / (1.0 - zeta) ** 2
        return (1.0 - zeta) ** (-s) * hyp_series(num, den, arg)

    prefactor = math.factorial(n) / pochhammer(s, n)
    return prefactor * taylor_coeff_adaptive(f, n, 0.25)


def beta_step(n: int, params, z: complex) -> complex:
    """One level of the recursive Beta-integral representation: integrate
    the (rho-1)-level family member (or the classical polynomial at
    rho = 1) against the Beta kernel of the last (delta, kappa) pair."""
    delta = params.deltas[-1]
    kappa = params.kappas[-1]
    if kappa < 1:
        raise DomainViolation("requires the last kappa >= 1")
    if isinstance(params, PParams):
        if not abs(z) < 1:
            raise DomainViolation("P-type step requires |z| < 1")
        if params.rho >= 2:
            inner = poly_P(n, PParams(params.alpha, params.beta,
                                      params.deltas[:-1], params.kappas[:-1]))
        else:
            inner = jacobi_J(n, params.alpha, params.beta)
    elif isinstance(params, LParams):
        if params.rho >= 2:
            inner = poly_L(n, LParams(params.alpha, params.deltas[:-1],
                                      params.kappas[:-1]))
        else:
            inner = laguerre_L(n, params.alpha)
    else:
        raise TypeError("params must be PParams or LParams")
    inner = inner.to_float()
    rule = gauss_jacobi01(n // 2 + 2, float(delta), float(kappa - 1))
    total = sum(w * inner.eval(z * t) for t, w in zip(rule.nodes, rule.weights))
    mass = math.exp(math.lgamma(float(delta) + 1.0) + math.lgamma(float(kappa))
                    - math.lgamma(float(delta) + float(kappa) + 1.0))
    return total / mass


# -- five-term recurrence -------------------------------------------------

@dataclass(frozen=True)
class RecurrenceCoeffs:
    """The seven scalars entering the five-term recurrence for the
    3F3 family with two numerator and three denominator parameters."""
    b1: Scalar
    b2: Scalar
    b3: Scalar
    c: Scalar
    b_hat: Scalar
    d: Scalar
    alpha_hat: Scalar


def recurrence_coeffs(alphas: Sequence[Scalar],
                      betas: Sequence[Scalar]) -> RecurrenceCoeffs:
    if len(alphas) != 2 or len(betas) != 3:
        raise ValueError("expected 2 numerator and 3 denominator parameters")
    a1, a2 = alphas
    b1, b2, b3 = (b - 1 for b in betas)
    c = b1 + b2 + b3 + 6
    b_hat = 7 + 3 * (b1 + b2 + b3) + b1 * b2 + b1 * b3 + b2 * b3
    d = (1 + b1 + b2 + b3 + b1 * b2 + b1 * b3 + b2 * b3 + b1 * b2 * b3)
    alpha_hat = 1 + a1 + a2
    return RecurrenceCoeffs(b1, b2, b3, c, b_hat, d, alpha_hat)


def recurrence_residual(k: int, alphas: Sequence[Scalar],
                        betas: Sequence[Scalar],
                        members=None) -> Polynomial:
    """LHS minus x times RHS of the five-term recurrence at index k, as a
    polynomial in x; the zero polynomial when the identity holds.

    ``members`` optionally overrides the polynomial table (index -> member),
    which the mutation-sensitivity tests use.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    a1, a2 = alphas
    rc = recurrence_coeffs(alphas, betas)
    params = GenParams(num=tuple(alphas), den=tuple(betas))

    def member(i):
        if i < 0:
            return Polynomial()
        if members is not None:
            return members[i]
        return poly_bigL(i, params)

    k3 = k * (k - 1) * (k - 2)
    k2 = k * (k - 1)
    lhs = (
        member(k + 1).scale(-k3 - k2 * rc.c - k * rc.b_hat - rc.d)
        .add(member(k).scale(4 * k3 + 3 * k2 * rc.c + 2 * k * rc.b_hat + rc.d))
        .add(member(k - 1).scale(-6 * k3 - 3 * k2 * rc.c - k * rc.b_hat))
        .add(member(k - 2).scale(4 * k3 + k2 * rc.c))
        .add(member(k - 3).scale(-k3))
    )
    rhs_bracket = (
        member(k).scale(k2 + k * rc.alpha_hat + a1 * a2)
        .sub(member(k - 1).scale(2 * k2 + k * rc.alpha_hat))
        .add(member(k - 2).scale(k2))
    )
    return lhs.sub(rhs_bracket.shift_mul_x(1))


def lparams_rho2_recurrence_args(params: LParams):
    """Map a rho = 2 Laguerre-type parameter set onto the (alphas, betas)
    of the five-term recurrence."""
    if params.rho != 2:
        raise ValueError("the five-term recurrence needs rho = 2")
    gen = lparams_to_gen(params)
    return gen.num, gen.den


# -- zero location --------------------------------------------------------

@dataclass(frozen=True)
class ZeroReport:
    roots: tuple
    max_modulus: float
    ek_condition_met: bool
    residual_max: float


def ek_ratio_condition(p: Polynomial, rtol: float = 1e-12) -> bool:
    """Coefficient test behind the unit-disc bound: after the sign flip
    z = -x the coefficients must be positive and non-decreasing."""
    if p.degree < 1:
        return False
    d = [(-1) ** m * complex(c).real for m, c in enumerate(p.to_float().coeffs)]
    scale = max(abs(v) for v in d)
    if any(v <= 0 for v in d):
        return False
    return all(d[m] <= d[m + 1] * (1 + rtol) + rtol * scale
               for m in range(len(d) - 1))


def zeros(p: Polynomial, max_iter: int = 200, tol: float = 1e-13) -> ZeroReport:
    """All complex roots by simultaneous (Aberth-Ehrlich) iteration with a
    deterministic initial circle at the Cauchy bound."""
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    coeffs = [complex(c) for c in p.coeffs]
    lead = coeffs[-1]
    n = len(coeffs) - 1
    radius = 1.0 + max(abs(c / lead) for c in coeffs[:-1])
    roots = [radius * cmath.exp(2j * cmath.pi * (j + 0.25) / n + 0.4j)
             for j in range(n)]
    dp = p.derivative(1)
    pc = p.to_float()
    dpc = dp.to_float()
    for _ in range(max_iter):
        worst = 0.0
        for j in range(n):
            z = roots[j]
            pv = pc.eval(z)
            dv = dpc.eval(z)
            if pv == 0:
                continue
            if dv == 0:
                roots[j] = z + 1e-8
                worst = math.inf
                continue
            w = pv / dv
            s = sum(1.0 / (z - roots[i]) for i in range(n) if i != j)
            corr = w / (1.0 - w * s)
            roots[j] = z - corr
            worst = max(worst, abs(corr) / (1.0 + abs(roots[j])))
        if worst < tol:
            break
    else:
        raise NoConvergence("root iteration exceeded its cap")
    roots.sort(key=lambda z: (z.real, z.imag))
    residual = max(abs(pc.eval(z)) for z in roots)
    return ZeroReport(tuple(roots), max(abs(z) for z in roots),
                      ek_ratio_condition(p), residual)


def ek_param_condition(params: GenParams) -> bool:
    """Parameter-level sufficient condition for the unit-disc zero bound:
    alpha_j >= beta_j pairwise and every unmatched alpha_k >= 1."""
    if params.p < params.q + 1:
        return False
    pairs = all(a >= b for a, b in zip(params.num, params.den))
    tail = all(a >= 1 for a in params.num[params.q:])
    return pairs and tail
