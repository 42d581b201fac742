from fractions import Fraction as F

import pytest

from hypersob import (GenParams, LParams, PParams, hyp_poly, jacobi_J,
                      laguerre_L, lparams_to_gen, pochhammer, poly_L, poly_P,
                      poly_bigL, poly_bigP, pparams_to_gen)
from hypersob.errors import (DegenerateParameters,
                             NonPositiveIntegerDenominator)
from hypersob.polyalg import Polynomial

from conftest import rand_fraction


def test_pochhammer_basics():
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6 == 360
    # duplication: (a)_{2k} = 4^k (a/2)_k ((a+1)/2)_k at a=1, k=2
    assert pochhammer(1, 4) == 24
    assert 4 ** 2 * pochhammer(F(1, 2), 2) * pochhammer(F(1), 2) == 24


def test_pochhammer_exact_on_fractions():
    v = pochhammer(F(1, 3), 3)
    assert v == F(1, 3) * F(4, 3) * F(7, 3)
    assert isinstance(v, F)


def test_hyp_poly_n0_is_one():
    assert hyp_poly(0, (F(5), F(-2)), (F(1, 3),)) == Polynomial([1])


def test_hyp_poly_single_term():
    # one extra numerator (1), denominators (1, 2): 1 - x/2
    assert hyp_poly(1, (F(1),), (F(1), F(2))) == Polynomial([1, F(-1, 2)])


def test_hyp_poly_matches_laguerre():
    # no extra numerator, denominator (1): Laguerre at alpha = 0, n = 2
    assert hyp_poly(2, (), (F(1),)) == Polynomial([1, -2, F(1, 2)])


def test_hyp_poly_rejects_bad_denominator():
    with pytest.raises(NonPositiveIntegerDenominator):
        hyp_poly(3, (), (F(-2),))
    with pytest.raises(NonPositiveIntegerDenominator):
        hyp_poly(3, (), (0,))


def test_poly_P_small_case():
    params = PParams(F(0), F(0), (F(0),), (1,))
    assert poly_P(1, params) == Polynomial([1, -1])


def test_poly_L_small_case():
    params = LParams(F(0), (F(0),), (1,))
    assert poly_L(1, params) == Polynomial([1, F(-1, 2)])


def test_poly_L_n0():
    assert poly_L(0, LParams(F(1, 2), (F(1, 4),), (2,))) == Polynomial([1])


def test_jacobi_laguerre_base_cases():
    assert laguerre_L(1, F(0)) == Polynomial([1, -1])
    assert jacobi_J(0, F(1, 2), F(1, 3)) == Polynomial([1])
    assert jacobi_J(1, F(0), F(0)) == Polynomial([1, -2])


def test_kappa_zero_collapses_to_classical(rng):
    for _ in range(6):
        alpha = rand_fraction(rng)
        beta = rand_fraction(rng)
        deltas = tuple(rand_fraction(rng) for _ in range(rng.randint(1, 3)))
        kappas = (0,) * len(deltas)
        for n in range(12):
            assert poly_P(n, PParams(alpha, beta, deltas, kappas)) == \
                jacobi_J(n, alpha, beta)
            assert poly_L(n, LParams(alpha, deltas, kappas)) == \
                laguerre_L(n, alpha)


def test_specialization_maps(rng):
    for _ in range(5):
        alpha = rand_fraction(rng)
        beta = rand_fraction(rng)
        deltas = tuple(rand_fraction(rng) for _ in range(2))
        kappas = (1, 2)
        pp = PParams(alpha, beta, deltas, kappas)
        lp = LParams(alpha, deltas, kappas)
        for n in range(10):
            assert poly_bigP(n, pparams_to_gen(pp)) == poly_P(n, pp)
            assert poly_bigL(n, lparams_to_gen(lp)) == poly_L(n, lp)


def test_bigL_degree_one():
    params = GenParams(num=(F(3), F(2)), den=(F(4),))
    assert poly_bigL(1, params) == Polynomial([1, -F(3) * F(2) / F(4)])


def test_degree_and_constant_term(rng):
    for _ in range(5):
        pp = PParams(rand_fraction(rng), rand_fraction(rng),
                     (rand_fraction(rng),), (rng.randint(0, 2),))
        lp = LParams(rand_fraction(rng), (rand_fraction(rng),),
                     (rng.randint(0, 2),))
        for n in range(9):
            p, l = poly_P(n, pp), poly_L(n, lp)
            assert p.degree == n and l.degree == n
            assert p.coeff(0) == 1 and l.coeff(0) == 1


def test_poly_L_alternating_signs(rng):
    for _ in range(5):
        lp = LParams(rand_fraction(rng, lo=0), (rand_fraction(rng, lo=0),),
                     (rng.randint(0, 2),))
        p = poly_L(8, lp)
        for m, c in enumerate(p.coeffs):
            assert (c > 0) == (m % 2 == 0)


def test_degenerate_guard():
    # n + a non-positive integer >= -n+1 kills the leading coefficient
    with pytest.raises(DegenerateParameters):
        poly_bigP(3, GenParams(num=(F(1),), den=(F(1),), a=F(-4)))


def test_param_validation():
    with pytest.raises(ValueError):
        PParams(F(-2), F(0), (F(0),), (1,))
    with pytest.raises(ValueError):
        LParams(F(0), (F(0), F(1)), (1,))
    with pytest.raises(ValueError):
        GenParams(num=(F(1),), den=(F(-3),))
