"""Batch verification command line.

Every subcommand builds a family from its flags, runs one class of checks
and emits a machine-readable report (JSON by default, CSV with
``--format csv``).  Exit code 0 means every check passed its tolerance,
1 means some check failed, 2 means the invocation was invalid.
"""

from __future__ import annotations

import argparse
import cmath
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import analysis, diffops, sobolev
from .errors import HypersobError
from .hyper import (GenParams, LParams, PParams, lparams_to_gen, poly_L,
                    poly_P, poly_bigL, poly_bigP, pparams_to_gen)
from .quadrature import gauss_jacobi01, gauss_laguerre
from .scalars import parse_scalar, pochhammer, scalar_repr

N_MAX_LIMIT = 64


def _worker_count() -> int:
    env = os.environ.get("HYPERSOB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(4, os.cpu_count() or 1)


def _parse_list(text):
    return tuple(parse_scalar(tok) for tok in text.split(",") if tok.strip())


def _parse_int_list(text):
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def _family_params(args):
    fam = args.family
    if fam == "P":
        if args.alpha is None or args.beta is None or not args.deltas:
            raise ValueError("family P needs --alpha, --beta, --deltas, --kappas")
        return PParams(parse_scalar(args.alpha), parse_scalar(args.beta),
                       _parse_list(args.deltas), _parse_int_list(args.kappas))
    if fam == "L":
        if args.alpha is None or not args.deltas:
            raise ValueError("family L needs --alpha, --deltas, --kappas")
        return LParams(parse_scalar(args.alpha),
                       _parse_list(args.deltas), _parse_int_list(args.kappas))
    if fam in ("bigP", "bigL"):
        if not args.num and fam == "bigP":
            raise ValueError(f"family {fam} needs --num and --den")
        a = parse_scalar(args.a) if args.a is not None else 0
        return GenParams(num=_parse_list(args.num or ""),
                         den=_parse_list(args.den or ""), a=a)
    raise ValueError(f"unknown family {fam!r}")


def _params_desc(args):
    keys = ("family", "alpha", "beta", "deltas", "kappas", "a", "num", "den",
            "n", "n_max")
    return {k: getattr(args, k) for k in keys
            if getattr(args, k, None) is not None}


def _report(check, args, tolerance, observed, ok):
    return {"check": check, "params": _params_desc(args),
            "tolerance": tolerance, "observed": observed, "pass": bool(ok)}


def _member(args, params, n):
    fam = args.family
    if fam == "P":
        return poly_P(n, params)
    if fam == "L":
        return poly_L(n, params)
    if fam == "bigP":
        return poly_bigP(n, params)
    return poly_bigL(n, params)


# -- subcommands ----------------------------------------------------------

def cmd_poly(args):
    params = _family_params(args)
    reports = []
    ns = [args.n] if args.n is not None else list(range(args.n_max + 1))
    for n in ns:
        p = _member(args, params, n)
        reports.append(_report(
            "poly", args, 0.0,
            {"n": n, "coefficients": [scalar_repr(c) for c in p.coeffs]},
            p.degree == n))
    return reports


def cmd_gram(args):
    params = _family_params(args)
    if args.family not in ("P", "L"):
        raise ValueError("gram supports families P and L")
    tol = args.tol if args.tol is not None else 1e-10
    variants = [sobolev.WEIGHT_STANDARD]
    if args.family == "P":
        variants.append(sobolev.WEIGHT_SHIFTED)
    reports = []
    for variant in variants:
        form = sobolev.SobolevForm.build(params, args.n_max, variant)
        rep = sobolev.gram(form, args.n_max)
        asserted = variant == sobolev.WEIGHT_STANDARD
        reports.append(_report(
            "gram", args, tol,
            {"weight": variant,
             "max_offdiag_ratio": rep.max_offdiag_ratio,
             "diagonal": list(rep.diagonal)},
            rep.passes(tol) if asserted else True))
    return reports


def _all_exact(values) -> bool:
    return all(not isinstance(v, float) for v in values)


def _identity_tol(args, params) -> float:
    """Exact identities use zero tolerance on the rational backend and
    1e-10 once any parameter was given as a decimal."""
    if args.tol is not None:
        return args.tol
    scalars = [getattr(params, "alpha", 0), getattr(params, "beta", 0),
               getattr(params, "a", 0)]
    scalars += list(getattr(params, "deltas", ()))
    scalars += list(getattr(params, "num", ()))
    scalars += list(getattr(params, "den", ()))
    return 0.0 if _all_exact(scalars) else 1e-10


def cmd_ode_check(args):
    params = _family_params(args)
    if args.family == "P":
        residual = lambda n: diffops.pencil_residual_P(n, params)
    elif args.family == "L":
        residual = lambda n: diffops.pencil_residual_L(n, params)
    else:
        raise ValueError("ode-check supports families P and L")
    tol = _identity_tol(args, params)
    reports = []
    for n in range(args.n_max + 1):
        worst = float(residual(n).to_float().max_abs_coeff())
        reports.append(_report("ode-check", args, tol,
                               {"n": n, "max_residual_coeff": worst},
                               worst <= tol))
    return reports


def cmd_recur_check(args):
    if args.family == "bigL":
        params = _family_params(args)
        alphas, betas = params.num, params.den
    elif args.family == "L":
        lp = _family_params(args)
        alphas, betas = analysis.lparams_rho2_recurrence_args(lp)
    else:
        raise ValueError("recur-check supports families bigL and L (rho=2)")
    if len(alphas) != 2 or len(betas) != 3:
        raise ValueError("the recurrence needs 2 numerator and 3 denominator "
                         "parameters")
    tol = (args.tol if args.tol is not None
           else 0.0 if _all_exact(alphas + betas) else 1e-10)
    reports = []
    for k in range(args.n_max + 1):
        res = analysis.recurrence_residual(k, alphas, betas)
        worst = float(res.to_float().max_abs_coeff())
        reports.append(_report("recur-check", args, tol,
                               {"k": k, "max_residual_coeff": worst},
                               worst <= tol))
    return reports


def _gf_samples_bigP():
    out = []
    for c in (1 / 3, 1 / 4):
        tr = c / 2
        xr = (1 / (4 * c) - 1 / 2) / 2
        for jt in range(5):
            t = tr * cmath.exp(2j * cmath.pi * jt / 5)
            for jx in range(2):
                x = xr * cmath.exp(2j * cmath.pi * (jx + 0.5) / 2)
                out.append((x, t))
    return out


def _gf_samples_bigL(restricted):
    r = 0.45 if restricted else 0.9
    out = []
    for jt in range(5):
        t = r * cmath.exp(2j * cmath.pi * jt / 5)
        for jx in range(4):
            x = 0.6 * cmath.exp(2j * cmath.pi * (jx + 0.3) / 4)
            out.append((x, t))
    return out


def cmd_gf_check(args):
    fam = args.family
    if fam == "P":
        params = pparams_to_gen(_family_params(args))
        fam = "bigP"
    elif fam == "L":
        params = lparams_to_gen(_family_params(args))
        fam = "bigL"
    else:
        params = _family_params(args)
    tol = args.tol if args.tol is not None else 1e-10
    trunc = args.n_max if args.n_max != 8 else 40
    if fam == "bigP":
        samples = _gf_samples_bigP()
        check = lambda xt: analysis.gf_check_bigP(params, xt[0], xt[1], trunc)
    else:
        samples = _gf_samples_bigL(params.p == params.q + 1)
        check = lambda xt: analysis.gf_check_bigL(params, xt[0], xt[1], trunc)
    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        results = list(pool.map(check, samples))
    reports = []
    for (x, t), (_, _, gap) in zip(samples, results):
        reports.append(_report(
            "gf-check", args, tol,
            {"x": [x.real, x.imag], "t": [t.real, t.imag], "gap": gap},
            gap < tol))
    return reports


def cmd_intrep_check(args):
    params = _family_params(args)
    tol = args.tol if args.tol is not None else 1e-9
    reports = []
    if args.family == "P":
        x = 0.125
        rep_fn = lambda n: analysis.integral_rep_P(n, params, x)
        direct = lambda n: complex(poly_P(n, params).to_float().eval(x))
        beta_ok = all(k >= 1 for k in params.kappas)
        bx = 0.7
        beta_fn = lambda n: analysis.beta_step(n, params, bx)
        beta_direct = lambda n: complex(poly_P(n, params).to_float().eval(bx))
    elif args.family == "L":
        x = 2.0
        rep_fn = lambda n: analysis.integral_rep_L(n, params, x)
        direct = lambda n: complex(poly_L(n, params).to_float().eval(x))
        beta_ok = all(k >= 1 for k in params.kappas)
        bx = 1.5
        beta_fn = lambda n: analysis.beta_step(n, params, bx)
        beta_direct = lambda n: complex(poly_L(n, params).to_float().eval(bx))
    else:
        raise ValueError("intrep-check supports families P and L")
    for n in range(args.n_max + 1):
        err = abs(rep_fn(n) - direct(n))
        reports.append(_report("intrep-contour", args, tol,
                               {"n": n, "abs_error": err}, err < tol))
        if beta_ok and params.kappas[-1] >= 1:
            berr = abs(beta_fn(n) - beta_direct(n))
            reports.append(_report("intrep-beta", args, tol,
                                   {"n": n, "abs_error": berr}, berr < tol))
    return reports


def cmd_zeros(args):
    params = _family_params(args)
    tol = args.tol if args.tol is not None else 1e-8
    reports = []
    ns = [args.n] if args.n is not None else list(range(1, args.n_max + 1))
    bound_expected = (isinstance(params, GenParams)
                      and analysis.ek_param_condition(params))
    for n in ns:
        rep = analysis.zeros(_member(args, params, n).to_float())
        inside = rep.max_modulus < 1 + tol
        ok = inside if bound_expected else True
        reports.append(_report(
            "zeros", args, tol,
            {"n": n,
             "roots": [[z.real, z.imag] for z in rep.roots],
             "max_modulus": rep.max_modulus,
             "ek_condition_met": rep.ek_condition_met,
             "inside_unit_disc": inside},
            ok))
    return reports


def cmd_quad(args):
    tol = args.tol if args.tol is not None else 1e-13
    n = args.npoints
    if args.rule == "jacobi01":
        a, b = float(parse_scalar(args.a_exp)), float(parse_scalar(args.b_exp))
        rule = gauss_jacobi01(n, a, b)
        # exact relative moments: (a+1)_d / (a+b+2)_d over the rationals
        fa, fb = Fraction(a), Fraction(b)
        moments = [float(pochhammer(fa + 1, d) / pochhammer(fa + fb + 2, d))
                   for d in range(rule.exactness + 1)]
    elif args.rule == "laguerre":
        a = float(parse_scalar(args.a_exp))
        rule = gauss_laguerre(n, a)
        fa = Fraction(a)
        moments = [float(pochhammer(fa + 1, d))
                   for d in range(rule.exactness + 1)]
    else:
        raise ValueError("rule must be jacobi01 or laguerre")
    mass = sum(rule.weights)
    worst = 0.0
    for d, mom in enumerate(moments):
        approx = sum(w * x ** d for x, w in zip(rule.nodes, rule.weights)) / mass
        worst = max(worst, abs(approx - mom) / max(abs(mom), 1e-300))
    return [_report("quad", args, tol,
                    {"rule": args.rule, "nodes": list(rule.nodes),
                     "weights": list(rule.weights),
                     "max_moment_rel_error": worst},
                    worst < tol)]


# -- output ---------------------------------------------------------------

def _emit(reports, args):
    if args.format == "json":
        text = json.dumps({"reports": reports}, indent=2, sort_keys=True)
    else:
        lines = ["check,index,key,value,pass"]
        for i, rep in enumerate(reports):
            for key, value in sorted(rep["observed"].items()):
                if isinstance(value, list):
                    for j, v in enumerate(value):
                        lines.append(f"{rep['check']},{i},{key}[{j}],"
                                     f"{v},{rep['pass']}")
                else:
                    lines.append(f"{rep['check']},{i},{key},{value},"
                                 f"{rep['pass']}")
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


COMMANDS = {
    "poly": cmd_poly,
    "gram": cmd_gram,
    "ode-check": cmd_ode_check,
    "recur-check": cmd_recur_check,
    "gf-check": cmd_gf_check,
    "intrep-check": cmd_intrep_check,
    "zeros": cmd_zeros,
    "quad": cmd_quad,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hypersob",
        description="Construct and verify hypergeometric Sobolev "
                    "orthogonal polynomial families.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--family", choices=["P", "L", "bigP", "bigL"],
                        default="L")
        sp.add_argument("--alpha")
        sp.add_argument("--beta")
        sp.add_argument("--deltas", help="comma-separated, e.g. 1/2,1/4")
        sp.add_argument("--kappas", help="comma-separated integers")
        sp.add_argument("--a")
        sp.add_argument("--num", help="comma-separated numerator parameters")
        sp.add_argument("--den", help="comma-separated denominator parameters")
        sp.add_argument("--n", type=int)
        sp.add_argument("--n-max", type=int, default=8)
        sp.add_argument("--tol", type=float)
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--out")
        if name == "quad":
            sp.add_argument("--rule", choices=["jacobi01", "laguerre"],
                            default="laguerre")
            sp.add_argument("--npoints", type=int, default=10)
            sp.add_argument("--a-exp", default="0")
            sp.add_argument("--b-exp", default="0")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n_max is not None and not (1 <= args.n_max <= N_MAX_LIMIT):
        print(f"hypersob: --n-max must be in [1, {N_MAX_LIMIT}]",
              file=sys.stderr)
        return 2
    try:
        reports = COMMANDS[args.command](args)
    except (ValueError, HypersobError) as exc:
        print(f"hypersob: {exc}", file=sys.stderr)
        return 2
    _emit(reports, args)
    return 0 if all(r["pass"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
