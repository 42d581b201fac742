"""Terminating hypergeometric series and the polynomial families.

Four families are provided:

* ``poly_P(n, PParams)``  -- Jacobi-type Sobolev family on [0, 1],
* ``poly_L(n, LParams)``  -- Laguerre-type Sobolev family on [0, inf),
* ``poly_bigP`` / ``poly_bigL`` -- their fully general parameterizations,

plus the classical hypergeometric normalizations ``jacobi_J`` and
``laguerre_L`` they collapse to when every smoothing index kappa_i is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateParameters, NonPositiveIntegerDenominator
from .polyalg import Polynomial
from .scalars import Scalar, is_exact


def _is_nonpositive_integer(x) -> bool:
    if is_exact(x):
        return Fraction(x).denominator == 1 and x <= 0
    return float(x) <= 0 and float(x) == int(x)


def hyp_poly(n: int, extra_num: Sequence[Scalar], den: Sequence[Scalar]) -> Polynomial:
    """Terminating series sum_{k<=n} (-n)_k prod(a_i)_k / prod(b_j)_k x^k/k!.

    ``extra_num`` are the numerator parameters besides -n.  Coefficients are
    built by a multiplicative term update, exact when all inputs are exact.
    """
    if n < 0:
        raise ValueError("truncation degree must be non-negative")
    for b in den:
        if _is_nonpositive_integer(b):
            raise NonPositiveIntegerDenominator(
                f"denominator parameter {b} is a non-positive integer")
    exact = all(is_exact(a) for a in extra_num) and all(is_exact(b) for b in den)
    coeffs = [Fraction(1) if exact else 1.0]
    term = coeffs[0]
    for k in range(n):
        term = term * (-n + k)
        for a in extra_num:
            term = term * (a + k)
        term = term / (k + 1)
        for b in den:
            term = term / (b + k)
        coeffs.append(term)
    return Polynomial(coeffs)


@dataclass(frozen=True)
class PParams:
    """Parameters of the Jacobi-type family: alpha, beta > -1, and per-level
    smoothing pairs (delta_i > -1, kappa_i a non-negative integer)."""
    alpha: Scalar
    beta: Scalar
    deltas: tuple = ()
    kappas: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(self.deltas))
        object.__setattr__(self, "kappas", tuple(int(k) for k in self.kappas))
        if len(self.deltas) != len(self.kappas):
            raise ValueError("deltas and kappas must have equal length")
        if len(self.deltas) < 1:
            raise ValueError("at least one (delta, kappa) pair is required")
        if not (self.alpha > -1 and self.beta > -1):
            raise ValueError("alpha and beta must exceed -1")
        if any(not d > -1 for d in self.deltas):
            raise ValueError("every delta must exceed -1")
        if any(k < 0 for k in self.kappas):
            raise ValueError("every kappa must be a non-negative integer")

    @property
    def rho(self) -> int:
        return len(self.deltas)


@dataclass(frozen=True)
class LParams:
    """Parameters of the Laguerre-type family: alpha > -1 plus smoothing
    pairs as in :class:`PParams`."""
    alpha: Scalar
    deltas: tuple = ()
    kappas: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(self.deltas))
        object.__setattr__(self, "kappas", tuple(int(k) for k in self.kappas))
        if len(self.deltas) != len(self.kappas):
            raise ValueError("deltas and kappas must have equal length")
        if len(self.deltas) < 1:
            raise ValueError("at least one (delta, kappa) pair is required")
        if not self.alpha > -1:
            raise ValueError("alpha must exceed -1")
        if any(not d > -1 for d in self.deltas):
            raise ValueError("every delta must exceed -1")
        if any(k < 0 for k in self.kappas):
            raise ValueError("every kappa must be a non-negative integer")

    @property
    def rho(self) -> int:
        return len(self.deltas)


@dataclass(frozen=True)
class GenParams:
    """Parameters of the general families: numerator list, denominator list,
    and (for the Jacobi-type one) the extra parameter ``a``.

    Constraints tying p and q to a particular use (generating functions,
    zero bounds) are enforced by the consuming operation.
    """
    num: tuple = ()
    den: tuple = ()
    a: Scalar = 0

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(self.num))
        object.__setattr__(self, "den", tuple(self.den))
        for b in self.den:
            if _is_nonpositive_integer(b):
                raise ValueError(
                    f"denominator parameter {b} is a non-positive integer")

    @property
    def p(self) -> int:
        return len(self.num)

    @property
    def q(self) -> int:
        return len(self.den)


def poly_P(n: int, params: PParams) -> Polynomial:
    """Jacobi-type Sobolev polynomial of degree n."""
    top = n + params.alpha + params.beta + 1
    # reject a degree-killing collision of the second numerator parameter
    if _is_nonpositive_integer(top) and top >= -n + 1:
        raise DegenerateParameters(
            "n + alpha + beta + 1 is a non-positive integer; "
            "the leading coefficient would vanish")
    num = (top,) + tuple(d + 1 for d in params.deltas)
    den = (params.alpha + 1,) + tuple(
        k + d + 1 for d, k in zip(params.deltas, params.kappas))
    return hyp_poly(n, num, den)


def poly_L(n: int, params: LParams) -> Polynomial:
    """Laguerre-type Sobolev polynomial of degree n."""
    num = tuple(d + 1 for d in params.deltas)
    den = (params.alpha + 1,) + tuple(
        k + d + 1 for d, k in zip(params.deltas, params.kappas))
    return hyp_poly(n, num, den)


def poly_bigP(n: int, params: GenParams) -> Polynomial:
    """General Jacobi-type polynomial with numerator parameter n + a."""
    top = n + params.a
    if _is_nonpositive_integer(top) and top >= -n + 1:
        raise DegenerateParameters(
            "n + a is a non-positive integer; the leading coefficient "
            "would vanish")
    return hyp_poly(n, (top,) + params.num, params.den)


def poly_bigL(n: int, params: GenParams) -> Polynomial:
    """General Laguerre-type polynomial."""
    return hyp_poly(n, params.num, params.den)


def jacobi_J(n: int, alpha: Scalar, beta: Scalar) -> Polynomial:
    """Classical Jacobi polynomial in its 2F1(-n, n+alpha+beta+1; alpha+1; x)
    normalization, orthogonal on [0, 1] w.r.t. x^alpha (1-x)^beta."""
    return hyp_poly(n, (n + alpha + beta + 1,), (alpha + 1,))


def laguerre_L(n: int, alpha: Scalar) -> Polynomial:
    """Classical Laguerre polynomial in its 1F1(-n; alpha+1; x)
    normalization, orthogonal on [0, inf) w.r.t. x^alpha e^{-x}."""
    return hyp_poly(n, (), (alpha + 1,))


def pparams_to_gen(params: PParams) -> GenParams:
    """Specialization map sending the Jacobi-type family into the general
    one: a = alpha+beta+1, num = deltas+1, den = (alpha+1, kappas+deltas+1)."""
    return GenParams(
        num=tuple(d + 1 for d in params.deltas),
        den=(params.alpha + 1,) + tuple(
            k + d + 1 for d, k in zip(params.deltas, params.kappas)),
        a=params.alpha + params.beta + 1,
    )


def lparams_to_gen(params: LParams) -> GenParams:
    """Specialization map for the Laguerre-type family."""
    return GenParams(
        num=tuple(d + 1 for d in params.deltas),
        den=(params.alpha + 1,) + tuple(
            k + d + 1 for d, k in zip(params.deltas, params.kappas)),
    )
