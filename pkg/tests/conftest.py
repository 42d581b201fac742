import random
from fractions import Fraction

import pytest


@pytest.fixture
def rng():
    return random.Random(20240817)


def rand_fraction(rng, lo=-1, hi=3, den_max=8):
    """Random rational strictly inside (lo, hi)."""
    den = rng.randint(1, den_max)
    num = rng.randint(lo * den + 1, hi * den - 1)
    return Fraction(num, den)


def rand_poly_coeffs(rng, degree, span=3):
    return [Fraction(rng.randint(-span * 4, span * 4), rng.randint(1, 4))
            for _ in range(degree + 1)]
