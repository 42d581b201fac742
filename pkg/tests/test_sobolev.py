import math
from fractions import Fraction as F

import numpy as np
import pytest

from hypersob import (LParams, PParams, SobolevForm, WEIGHT_SHIFTED,
                      dhat_operator, gram, jacobi_J, laguerre_L,
                      moment_matrix_eval, pochhammer, poly_L,
                      sobolev_inner)
from hypersob.diffops import L_expand
from hypersob.errors import RuleTooShort
from hypersob.polyalg import Polynomial
from hypersob.quadrature import gauss_jacobi01, gauss_laguerre

from conftest import rand_fraction, rand_poly_coeffs


LP = LParams(F(1, 2), (F(1, 2),), (1,))
PP = PParams(F(1, 2), F(1, 3), (F(1, 4), F(1, 5)), (1, 2))


def test_moment_matrix_trivial():
    from hypersob.diffops import DiffOperator
    op = DiffOperator((Polynomial([1]),))
    m = moment_matrix_eval(op, 0.37)
    assert m.shape == (1, 1) and m[0, 0] == 1.0


def test_moment_matrix_rank_one():
    op = dhat_operator(PP)
    for x in (0.1, 0.5, 0.9):
        m = moment_matrix_eval(op, x)
        assert np.linalg.matrix_rank(m, tol=1e-10) <= 1
        c = [float(op.coeff(j).to_float().eval(x))
             for j in range(op.order + 1)]
        assert np.trace(m) == pytest.approx(sum(v * v for v in c), rel=1e-13)


def test_moment_matrix_entries_from_expansion():
    op = L_expand(F(1, 4), 1)
    x = 0.6
    m = moment_matrix_eval(op, x)
    c = [float(op.coeff(j).to_float().eval(x)) for j in range(2)]
    for i in range(2):
        for j in range(2):
            assert m[i, j] == pytest.approx(c[i] * c[j], rel=1e-14)


def test_moment_matrix_psd(rng):
    op = dhat_operator(LP)
    for _ in range(10):
        x = rng.random() * 5
        y = np.array([rng.uniform(-1, 1) for _ in range(op.order + 1)])
        assert y @ moment_matrix_eval(op, x) @ y >= -1e-14


def test_two_path_agreement(rng):
    form = SobolevForm.build(LP, 10)
    for _ in range(8):
        p = Polynomial(rand_poly_coeffs(rng, rng.randint(0, 6)))
        q = Polynomial(rand_poly_coeffs(rng, rng.randint(0, 6)))
        a = sobolev_inner(form, p, q, path="matrix")
        b = sobolev_inner(form, p, q, path="dhat")
        assert abs(a - b) <= 1e-12 * max(abs(a), abs(b), 1.0)


def test_rank_one_identity_pointwise(rng):
    form = SobolevForm.build(LP, 8)
    op = form.dhat
    p = Polynomial(rand_poly_coeffs(rng, 5)).to_float()
    q = Polynomial(rand_poly_coeffs(rng, 4)).to_float()
    from hypersob.diffops import dhat_apply
    dp, dq = dhat_apply(LP, p), dhat_apply(LP, q)
    for x in form.rule.nodes:
        pv = np.array([p.derivative(j).eval(x) for j in range(op.order + 1)])
        qv = np.array([q.derivative(j).eval(x) for j in range(op.order + 1)])
        lhs = pv @ moment_matrix_eval(op, x) @ qv
        rhs = dp.eval(x) * dq.eval(x)
        assert abs(lhs - rhs) <= 1e-12 * max(abs(rhs), 1.0)


def test_inner_kappa0_constant():
    params = LParams(F(1, 2), (F(1, 4),), (0,))
    form = SobolevForm.build(params, 4)
    one = Polynomial([1])
    assert sobolev_inner(form, one, one) == \
        pytest.approx(math.gamma(1.5), rel=1e-13)


def test_gram_L_type_diagonal():
    form = SobolevForm.build(LP, 8)
    rep = gram(form, 8)
    assert rep.max_offdiag_ratio < 1e-10
    assert all(d > 0 for d in rep.diagonal)


def test_gram_kappa0_matches_classical_norms():
    alpha = F(1, 2)
    params = LParams(alpha, (F(1, 4),), (0,))
    form = SobolevForm.build(params, 8)
    rep = gram(form, 8)
    for n, d in enumerate(rep.diagonal):
        expected = (math.factorial(n) * math.gamma(float(alpha) + 1)
                    / float(pochhammer(alpha + 1, n)))
        assert d == pytest.approx(expected, rel=1e-12)


def test_gram_P_type_diagonal():
    form = SobolevForm.build(PP, 8)
    rep = gram(form, 8)
    assert rep.max_offdiag_ratio < 1e-10
    assert all(d > 0 for d in rep.diagonal)


def test_gram_sweep(rng):
    for rho in (1, 2, 3):
        alpha, beta = rand_fraction(rng), rand_fraction(rng)
        deltas = tuple(rand_fraction(rng) for _ in range(rho))
        kappas = tuple(rng.randint(1, 2) for _ in range(rho))
        for params in (PParams(alpha, beta, deltas, kappas),
                       LParams(alpha, deltas, kappas)):
            rep = gram(SobolevForm.build(params, 6), 6)
            assert rep.max_offdiag_ratio < 1e-10
            assert all(d > 0 for d in rep.diagonal)


def test_gram_diagonal_is_classical_norm_of_reduction():
    """Diagonal entries equal the plain L2 norms of the reduced classical
    polynomials, checked by direct quadrature."""
    form = SobolevForm.build(LP, 8)
    rep = gram(form, 8)
    rule = gauss_laguerre(12, float(LP.alpha))
    for n in range(9):
        ln = laguerre_L(n, LP.alpha).to_float()
        direct = sum(w * ln.eval(x) ** 2
                     for x, w in zip(rule.nodes, rule.weights))
        assert rep.diagonal[n] == pytest.approx(direct, rel=1e-11)

    formp = SobolevForm.build(PP, 8)
    repp = gram(formp, 8)
    rulep = gauss_jacobi01(12, float(PP.alpha), float(PP.beta))
    for n in range(9):
        jn = jacobi_J(n, PP.alpha, PP.beta).to_float()
        direct = sum(w * jn.eval(x) ** 2
                     for x, w in zip(rulep.nodes, rulep.weights))
        assert repp.diagonal[n] == pytest.approx(direct, rel=1e-9)


def test_shifted_weight_is_not_diagonal():
    # the alternative (1-x)^a (1+x)^b weight does not orthogonalize the family
    form = SobolevForm.build(PP, 6, WEIGHT_SHIFTED)
    rep = gram(form, 6)
    assert rep.max_offdiag_ratio > 1e-6


def test_rule_too_short():
    form = SobolevForm.build(LP, 2)
    big = poly_L(2, LP)
    with pytest.raises(RuleTooShort):
        sobolev_inner(form, big.mul(big).mul(big), big)


def test_gram_matrix_symmetric():
    rep = gram(SobolevForm.build(LP, 6), 6)
    assert np.allclose(rep.matrix, rep.matrix.T, rtol=1e-13, atol=0)
