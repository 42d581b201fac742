"""Scalar helpers: the exact-rational / float64 dual backend.

Exact values are ``fractions.Fraction`` (ints are accepted and treated as
exact); float values are plain ``float``.  Identity checks run on the
exact backend, numerics on the float one.
"""

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float]


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def pochhammer(c: Scalar, k: int) -> Scalar:
    """Rising factorial c (c+1) ... (c+k-1), with the empty product = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be non-negative")
    out = Fraction(1) if is_exact(c) else 1.0
    for i in range(k):
        out = out * (c + i)
    return out


def parse_scalar(text: str) -> Scalar:
    """Parse a CLI parameter: '2/3' or '4' -> Fraction, '0.25' -> float."""
    text = text.strip()
    try:
        if "/" in text or ("." not in text and "e" not in text.lower()):
            return Fraction(text)
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc


def scalar_repr(x: Scalar) -> str:
    """Stable string form: '3/4' for exact values, repr for floats."""
    if isinstance(x, Fraction):
        return str(x)
    return repr(x)
