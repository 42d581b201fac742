"""Dense univariate polynomials over the exact-rational or float backend.

Coefficients are stored in the monomial basis, index m = coefficient of
x^m.  Values are immutable; every operation trims trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BackendMismatch


def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable dense polynomial; ring operations, evaluation, derivatives."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_float_backed(self) -> bool:
        return any(isinstance(c, (float, complex)) for c in self.coeffs)

    def _has_fraction(self) -> bool:
        return any(isinstance(c, Fraction) for c in self.coeffs)

    def coeff(self, m: int):
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else 0

    def _check_backend(self, other: "Polynomial"):
        # integer-only polynomials are neutral and mix with either backend
        if (self.is_float_backed() and other._has_fraction()) or (
                other.is_float_backed() and self._has_fraction()):
            raise BackendMismatch(
                "cannot mix exact-rational and float polynomials")

    # -- ring operations --------------------------------------------------

    def add(self, other: "Polynomial") -> "Polynomial":
        self._check_backend(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    def sub(self, other: "Polynomial") -> "Polynomial":
        self._check_backend(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) - other.coeff(i) for i in range(n)])

    def scale(self, s) -> "Polynomial":
        return Polynomial([s * c for c in self.coeffs])

    def mul(self, other: "Polynomial") -> "Polynomial":
        self._check_backend(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def shift_mul_x(self, m: int) -> "Polynomial":
        """Multiply by x^m."""
        if self.is_zero():
            return self
        return Polynomial([0] * m + list(self.coeffs))

    __add__ = add
    __sub__ = sub
    __mul__ = mul

    def __neg__(self):
        return self.scale(-1)

    # -- calculus ---------------------------------------------------------

    def derivative(self, order: int = 1) -> "Polynomial":
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        if order == 0:
            return self
        if order > self.degree:
            return Polynomial()
        coeffs = self.coeffs
        for _ in range(order):
            coeffs = tuple(m * c for m, c in enumerate(coeffs))[1:]
        return Polynomial(coeffs)

    def eval(self, x):
        """Horner evaluation; x may be exact, float or complex."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    # -- conversions ------------------------------------------------------

    def to_float(self) -> "Polynomial":
        return Polynomial([float(c) for c in self.coeffs])

    def max_abs_coeff(self):
        return max((abs(c) for c in self.coeffs), default=0)

    # -- dunder plumbing --------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


ZERO = Polynomial()
ONE = Polynomial([1])


def monomial(m: int, c=1) -> Polynomial:
    return Polynomial([0] * m + [c])
