import cmath
import math
from fractions import Fraction as F

import pytest

from hypersob import (gauss_jacobi01, gauss_laguerre, pochhammer,
                      taylor_coeff_adaptive, taylor_coeff_contour)


def jacobi01_moment(a, b, d):
    """Exact relative moment int x^{a+d}(1-x)^b dx / int x^a(1-x)^b dx,
    i.e. (a+1)_d / (a+b+2)_d over the rationals."""
    return pochhammer(F(a) + 1, d) / pochhammer(F(a) + F(b) + 2, d)


def laguerre_moment(a, d):
    """Exact relative moment: (a+1)_d."""
    return pochhammer(F(a) + 1, d)


def test_jacobi01_one_point_uniform():
    rule = gauss_jacobi01(1, 0.0, 0.0)
    assert rule.nodes[0] == pytest.approx(0.5, abs=1e-14)
    assert rule.weights[0] == pytest.approx(1.0, abs=1e-14)


def test_laguerre_one_point():
    rule = gauss_laguerre(1, 0.0)
    assert rule.nodes[0] == pytest.approx(1.0, abs=1e-13)
    assert rule.weights[0] == pytest.approx(1.0, abs=1e-13)


def test_laguerre_one_point_general():
    a = 0.75
    rule = gauss_laguerre(1, a)
    assert rule.nodes[0] == pytest.approx(a + 1, rel=1e-13)
    assert rule.weights[0] == pytest.approx(math.gamma(a + 1), rel=1e-13)


def test_jacobi01_mass():
    a, b = 0.5, 1.25
    rule = gauss_jacobi01(7, a, b)
    mass = math.gamma(a + 1) * math.gamma(b + 1) / math.gamma(a + b + 2)
    assert sum(rule.weights) == pytest.approx(mass, rel=1e-13)


@pytest.mark.parametrize("N", [1, 2, 5, 12, 25, 40])
def test_jacobi01_exactness(N):
    a, b = F(1, 2), F(5, 4)
    rule = gauss_jacobi01(N, float(a), float(b))
    mass = sum(rule.weights)
    for d in range(rule.exactness + 1):
        approx = sum(w * x ** d for x, w in zip(rule.nodes, rule.weights))
        exact = float(jacobi01_moment(a, b, d)) * mass
        assert abs(approx - exact) < 1e-13 * abs(exact)


@pytest.mark.parametrize("N", [1, 2, 5, 12, 25, 40])
def test_laguerre_exactness(N):
    a = F(3, 4)
    rule = gauss_laguerre(N, float(a))
    mass = sum(rule.weights)
    for d in range(rule.exactness + 1):
        approx = sum(w * x ** d for x, w in zip(rule.nodes, rule.weights))
        exact = float(laguerre_moment(a, d)) * mass
        assert abs(approx - exact) < 1e-13 * abs(exact)


def test_rule_invariants():
    rule = gauss_jacobi01(15, 0.3, -0.2)
    assert all(0 < x < 1 for x in rule.nodes)
    assert all(rule.nodes[i] < rule.nodes[i + 1] for i in range(14))
    assert all(w > 0 for w in rule.weights)
    rule = gauss_laguerre(15, 0.3)
    assert all(x > 0 for x in rule.nodes)
    assert all(w > 0 for w in rule.weights)


@pytest.mark.parametrize("builder,args", [
    (gauss_jacobi01, (0.5, 0.5)),
    (gauss_laguerre, (0.5,)),
])
def test_node_interlacing(builder, args):
    small = builder(9, *args).nodes
    big = builder(10, *args).nodes
    for i, x in enumerate(small):
        assert big[i] < x < big[i + 1]


def test_contour_exp_coefficient():
    c = taylor_coeff_contour(cmath.exp, 3, 1.0, 64)
    assert abs(c - 1.0 / 6.0) < 1e-12


def test_contour_geometric_series():
    c = taylor_coeff_contour(lambda z: 1.0 / (1.0 - z), 5, 0.5, 256)
    assert abs(c - 1.0) < 1e-10


def test_contour_adaptive():
    c = taylor_coeff_adaptive(cmath.exp, 6, 1.0)
    assert abs(c - 1.0 / math.factorial(6)) < 1e-12


def test_invalid_inputs():
    with pytest.raises(ValueError):
        gauss_jacobi01(0, 0.0, 0.0)
    with pytest.raises(ValueError):
        gauss_jacobi01(3, -1.5, 0.0)
    with pytest.raises(ValueError):
        gauss_laguerre(3, -2.0)
    with pytest.raises(ValueError):
        taylor_coeff_contour(cmath.exp, 1, 1.0, 2)
