"""Hypergeometric Sobolev orthogonal polynomial families and checks."""

from .analysis import (RecurrenceCoeffs, ZeroReport, beta_step, gf_check_bigL,
                       gf_check_bigP, hyp_series, integral_rep_L,
                       integral_rep_P, recurrence_coeffs, recurrence_residual,
                       zeros)
from .diffops import (DiffOperator, L_apply, L_expand, compose, dhat_apply,
                      dhat_operator, pencil_residual_L, pencil_residual_P)
from .hyper import (GenParams, LParams, PParams, hyp_poly, jacobi_J,
                    laguerre_L, lparams_to_gen, poly_L, poly_P, poly_bigL,
                    poly_bigP, pparams_to_gen)
from .polyalg import Polynomial
from .quadrature import (QuadRule, gauss_jacobi01, gauss_laguerre,
                         taylor_coeff_adaptive, taylor_coeff_contour)
from .scalars import parse_scalar, pochhammer
from .sobolev import (GramReport, SobolevForm, WEIGHT_SHIFTED,
                      WEIGHT_STANDARD, gram, moment_matrix_eval,
                      sobolev_inner)

__all__ = [
    "DiffOperator", "GenParams", "GramReport", "LParams", "PParams",
    "Polynomial", "QuadRule", "RecurrenceCoeffs", "SobolevForm",
    "WEIGHT_SHIFTED", "WEIGHT_STANDARD", "ZeroReport", "beta_step",
    "compose", "dhat_apply", "dhat_operator", "gauss_jacobi01",
    "gauss_laguerre", "gf_check_bigL", "gf_check_bigP", "gram", "hyp_poly",
    "hyp_series", "integral_rep_L", "integral_rep_P", "jacobi_J",
    "laguerre_L", "L_apply", "L_expand", "lparams_to_gen",
    "moment_matrix_eval", "parse_scalar", "pencil_residual_L",
    "pencil_residual_P", "pochhammer", "poly_L", "poly_P", "poly_bigL",
    "poly_bigP", "pparams_to_gen", "recurrence_coeffs",
    "recurrence_residual", "sobolev_inner", "taylor_coeff_adaptive",
    "taylor_coeff_contour", "zeros",
]

__version__ = "0.1.0"
