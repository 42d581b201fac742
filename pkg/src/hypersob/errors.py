"""Exception types shared across the package."""


class HypersobError(Exception):
    """Base class for all package-specific errors."""


class NonPositiveIntegerDenominator(HypersobError):
    """A lower (denominator) parameter of a hypergeometric series is a
    non-positive integer, so the series is undefined."""


class DegenerateParameters(HypersobError):
    """Parameter values would silently kill the leading coefficient of a
    polynomial family member."""


class BackendMismatch(HypersobError):
    """Arithmetic attempted between an exact-rational polynomial and a
    float-backed one."""


class DomainViolation(HypersobError):
    """Inputs fall outside the convergence / validity region of a check."""


class RuleTooShort(HypersobError):
    """A quadrature rule's exactness degree is insufficient for the
    requested integrand."""


class EigenNoConvergence(HypersobError):
    """The tridiagonal eigensolver did not converge."""


class NoConvergence(HypersobError):
    """An iterative procedure exceeded its iteration cap."""
