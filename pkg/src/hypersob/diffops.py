"""Differential operators acting on the polynomial families.

Two representations are used side by side:

* the *diagonal* one -- the smoothing operator and its compositions act on
  a monomial x^m as multiplication by an explicit eigenvalue, which is the
  fast path;
* the *expanded* one -- a finite-order operator sum_j c_j(x) d^j/dx^j with
  polynomial coefficients, obtained by the Leibniz rule and symbolic
  operator composition.  The expanded coefficients feed the matrix measure
  of the Sobolev bilinear form.

The theta-calculus (theta = x d/dx, diagonal on monomials) backs the
differential pencil residual checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence, Union

from .hyper import LParams, PParams, jacobi_J, laguerre_L, poly_L, poly_P
from .polyalg import Polynomial
from .scalars import Scalar, is_exact, pochhammer


@dataclass(frozen=True)
class DiffOperator:
    """Finite-order linear differential operator sum_j coeffs[j] * d^j/dx^j."""

    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def apply(self, p: Polynomial) -> Polynomial:
        out = Polynomial()
        for j, c in enumerate(self.coeffs):
            out = out.add(c.mul(p.derivative(j)))
        return out

    def coeff(self, j: int) -> Polynomial:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Polynomial()


def smoothing_eigenvalue(delta: Scalar, k: int, m: int) -> Scalar:
    """Eigenvalue of the order-k smoothing operator on x^m:
    (delta+m+1)_k / (delta+1)_k."""
    return pochhammer(delta + m + 1, k) / pochhammer(delta + 1, k)


def diagonal_apply(eig: Callable[[int], Scalar], p: Polynomial) -> Polynomial:
    """Apply an operator that is diagonal on monomials, x^m -> eig(m) x^m."""
    return Polynomial([eig(m) * c for m, c in enumerate(p.coeffs)])


def L_apply(delta: Scalar, k: int, p: Polynomial) -> Polynomial:
    """Apply the smoothing operator
    y -> (1/(delta+1)_k) x^{-delta} (x^{k+delta} y)^{(k)} via its diagonal
    monomial action."""
    return diagonal_apply(lambda m: smoothing_eigenvalue(delta, k, m), p)


def L_expand(delta: Scalar, k: int) -> DiffOperator:
    """Leibniz expansion of the smoothing operator into derivative form:
    sum_i C(k,i) (delta+i+1)_{k-i} / (delta+1)_k * x^i d^i/dx^i."""
    norm = pochhammer(delta + 1, k)
    coeffs = []
    for i in range(k + 1):
        c = comb(k, i) * pochhammer(delta + i + 1, k - i) / norm
        coeffs.append(Polynomial([0] * i + [c]))
    return DiffOperator(tuple(coeffs))


def operator_mul(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    """Operator product a o b (b applied first), expanded symbolically."""
    out = [Polynomial() for _ in range(a.order + b.order + 1)]
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b.coeffs):
            if bj.is_zero():
                continue
            # d^i (b_j y^(j)) = sum_r C(i,r) b_j^(r) y^(j+i-r)
            for r in range(i + 1):
                out[j + i - r] = out[j + i - r].add(
                    ai.mul(bj.derivative(r)).scale(comb(i, r)))
    return DiffOperator(tuple(out))


def compose(ops: Sequence[DiffOperator]) -> DiffOperator:
    """Product of operators in the given order (leftmost applied last)."""
    if not ops:
        raise ValueError("compose requires at least one operator")
    acc = ops[0]
    for op in ops[1:]:
        acc = operator_mul(acc, op)
    return acc


FamilyParams = Union[PParams, LParams]


def dhat_eigenvalue(params: FamilyParams, m: int) -> Scalar:
    """Diagonal action of the composed smoothing operator on x^m."""
    exact = all(is_exact(d) for d in params.deltas)
    lam = Fraction(1) if exact else 1.0
    for d, k in zip(params.deltas, params.kappas):
        lam = lam * smoothing_eigenvalue(d, k, m)
    return lam


def dhat_apply(params: FamilyParams, p: Polynomial) -> Polynomial:
    """Apply the composed smoothing operator via the diagonal fast path."""
    return diagonal_apply(lambda m: dhat_eigenvalue(params, m), p)


def dhat_operator(params: FamilyParams) -> DiffOperator:
    """Expanded-coefficient form of the composed smoothing operator."""
    return compose([L_expand(d, k)
                    for d, k in zip(params.deltas, params.kappas)])


# -- theta-calculus pencil checks -----------------------------------------

def _theta_prod(p: Polynomial, factors: Callable[[int], Scalar]) -> Polynomial:
    return diagonal_apply(factors, p)


def pencil_residual_P(n: int, params: PParams,
                      member: Polynomial = None) -> Polynomial:
    """Residual of the generalized eigenvalue equation for the Jacobi-type
    family; the zero polynomial when the family satisfies its pencil.

    ``member`` substitutes another polynomial for family member n, used by
    sensitivity tests.
    """
    a, b = params.alpha, params.beta
    ds, ks = params.deltas, params.kappas
    p = poly_P(n, params) if member is None else member

    def k_eig(m):
        out = m * (m + a)
        for d, kk in zip(ds, ks):
            out = out * (m + kk + d)
        return out

    def l_eig(m):
        out = 1 if is_exact(a) else 1.0
        for d in ds:
            out = out * (m + d + 1)
        return out

    kp = _theta_prod(p, k_eig)
    lp = _theta_prod(p, l_eig)
    mid = _theta_prod(lp, lambda m: m * (m + a + b + 1))
    d0 = kp.sub(mid.shift_mul_x(1))
    d1 = lp.shift_mul_x(1)
    return d0.add(d1.scale(n * (n + a + b + 1)))


def pencil_residual_L(n: int, params: LParams,
                      member: Polynomial = None) -> Polynomial:
    """Residual of the pencil equation for the Laguerre-type family."""
    a = params.alpha
    ds, ks = params.deltas, params.kappas
    p = poly_L(n, params) if member is None else member

    def k_eig(m):
        out = m * (m + a)
        for d, kk in zip(ds, ks):
            out = out * (m + kk + d)
        return out

    def l_eig(m):
        out = 1 if is_exact(a) else 1.0
        for d in ds:
            out = out * (m + d + 1)
        return out

    kp = _theta_prod(p, k_eig)
    lp = _theta_prod(p, l_eig)
    mid = _theta_prod(lp, lambda m: m)
    d2 = kp.sub(mid.shift_mul_x(1))
    d1 = lp.shift_mul_x(1)
    return d2.add(d1.scale(n))


def reduction_target(n: int, params: FamilyParams) -> Polynomial:
    """The classical polynomial the composed operator maps family member n
    onto: Jacobi for the P-type family, Laguerre for the L-type."""
    if isinstance(params, PParams):
        return jacobi_J(n, params.alpha, params.beta)
    return laguerre_L(n, params.alpha)
