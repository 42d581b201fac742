"""The matrix-measure Sobolev bilinear form and Gram-matrix verification.

The form is  <p, q> = int (p, p', ..., p^(kappa)) M(x) (q, ..., q^(kappa))^T w(x) dx
with the rank-one matrix measure M(x) = c(x)^T c(x) built from the expanded
coefficients of the composed smoothing operator.  Because M is rank one the
form collapses to int (Dp)(Dq) w dx, which is the independent second path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass

import numpy as np

from .diffops import DiffOperator, dhat_apply, dhat_operator
from .errors import RuleTooShort
from .hyper import LParams, PParams, poly_L, poly_P
from .polyalg import Polynomial
from .quadrature import QuadRule, gauss_jacobi01, gauss_laguerre

# weight variants for the P-type form on [0,1]
WEIGHT_STANDARD = "x^a(1-x)^b"       # matches the 2F1 Jacobi normalization
WEIGHT_SHIFTED = "(1-x)^a(1+x)^b"    # alternative form kept for comparison


@dataclass(frozen=True)
class SobolevForm:
    family: str                  # "P" | "L"
    params: object               # PParams | LParams
    dhat: DiffOperator
    rule: QuadRule
    weight_variant: str = WEIGHT_STANDARD

    @property
    def kappa(self) -> int:
        return sum(self.params.kappas)

    @classmethod
    def build(cls, params, n_max: int,
              weight_variant: str = WEIGHT_STANDARD) -> "SobolevForm":
        """Form with quadrature sized for Gram entries up to degree n_max."""
        dhat = dhat_operator(params)
        n_rule = n_max + 2
        if isinstance(params, PParams):
            a, b = float(params.alpha), float(params.beta)
            if weight_variant == WEIGHT_STANDARD:
                rule = gauss_jacobi01(n_rule, a, b)
            elif weight_variant == WEIGHT_SHIFTED:
                # (1+x)^b is smooth and positive on [0,1]; fold it into the
                # integrand under the x^0 (1-x)^a rule and oversample
                rule = gauss_jacobi01(n_rule + 30, 0.0, a)
            else:
                raise ValueError(f"unknown weight variant {weight_variant!r}")
            return cls("P", params, dhat, rule, weight_variant)
        if isinstance(params, LParams):
            rule = gauss_laguerre(n_rule, float(params.alpha))
            return cls("L", params, dhat, rule, WEIGHT_STANDARD)
        raise TypeError("params must be PParams or LParams")

    def member(self, n: int) -> Polynomial:
        if self.family == "P":
            return poly_P(n, self.params)
        return poly_L(n, self.params)

    def _extra_weight(self, x: float) -> float:
        if self.weight_variant == WEIGHT_SHIFTED:
            return (1.0 + x) ** float(self.params.beta)
        return 1.0


def moment_matrix_eval(dhat: DiffOperator, x: float) -> np.ndarray:
    """Rank-one matrix measure c(x)^T c(x) at a point."""
    c = np.array([float(dhat.coeff(j).to_float().eval(x))
                  for j in range(dhat.order + 1)])
    return np.outer(c, c)


def sobolev_inner(form: SobolevForm, p: Polynomial, q: Polynomial,
                  path: str = "matrix") -> float:
    """Sobolev inner product of p and q.

    ``path="matrix"`` integrates the derivative stacks against the matrix
    measure; ``path="dhat"`` integrates (Dp)(Dq) directly.  The two agree
    by the rank-one identity.
    """
    pf, qf = p.to_float(), q.to_float()
    if form.rule.exactness < max(pf.degree, 0) + max(qf.degree, 0):
        raise RuleTooShort(
            f"rule exactness {form.rule.exactness} insufficient for degrees "
            f"{pf.degree} and {qf.degree}")
    if path == "dhat":
        if not (p.is_float_backed() or q.is_float_backed()):
            # monomial-basis Horner of high-degree family members cancels
            # catastrophically in float64; exact-coefficient inputs are
            # evaluated exactly at the (rational) node values instead
            dp = dhat_apply(form.params, p)
            dq = dhat_apply(form.params, q)
            total = 0.0
            for x, w in zip(form.rule.nodes, form.rule.weights):
                fx = Fraction(x)
                total += (w * float(dp.eval(fx)) * float(dq.eval(fx))
                          * form._extra_weight(x))
            return total
        dp = dhat_apply(form.params, pf)
        dq = dhat_apply(form.params, qf)
        return sum(w * dp.eval(x) * dq.eval(x) * form._extra_weight(x)
                   for x, w in zip(form.rule.nodes, form.rule.weights))
    if path != "matrix":
        raise ValueError(f"unknown path {path!r}")
    kappa = form.dhat.order
    pder = [pf.derivative(j) for j in range(kappa + 1)]
    qder = [qf.derivative(j) for j in range(kappa + 1)]
    total = 0.0
    for x, w in zip(form.rule.nodes, form.rule.weights):
        pv = np.array([d.eval(x) for d in pder])
        qv = np.array([d.eval(x) for d in qder])
        m = moment_matrix_eval(form.dhat, x)
        total += w * float(pv @ m @ qv) * form._extra_weight(x)
    return total


@dataclass(frozen=True)
class GramReport:
    size: int
    matrix: np.ndarray
    diagonal: tuple
    max_offdiag_ratio: float
    weight_variant: str

    def passes(self, tol: float = 1e-10) -> bool:
        return (self.max_offdiag_ratio < tol
                and all(d > 0 for d in self.diagonal))


def gram(form: SobolevForm, N: int, path: str = "dhat") -> GramReport:
    """Gram matrix of family members 0..N under the Sobolev form."""
    if N < 1:
        raise ValueError("N must be >= 1")
    members = [form.member(n) for n in range(N + 1)]
    g = np.zeros((N + 1, N + 1))
    for n in range(N + 1):
        for m in range(n, N + 1):
            v = sobolev_inner(form, members[n], members[m], path=path)
            g[n, m] = g[m, n] = v
    diag = tuple(g.diagonal())
    off = max((abs(g[n, m]) for n in range(N + 1) for m in range(N + 1)
               if n != m), default=0.0)
    ratio = off / min(diag) if min(diag) > 0 else math.inf
    return GramReport(N + 1, g, diag, ratio, form.weight_variant)
