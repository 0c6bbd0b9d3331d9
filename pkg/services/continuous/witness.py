import math

import models
import models.extremal_function as ef
import services.errors
import services.roots


def build_fstar(L: float, exp: models.Exponent) -> models.ExtremalFunction:
    alpha = services.roots.solve_alpha_extremal(L, exp.q)

    return models.ExtremalFunction(alpha=alpha, exp=exp, kind=ef.KIND_FSTAR)


def build_f_ab_p2(L: float) -> models.ExtremalFunction:
    alpha = services.roots.solve_alpha_p2(L)

    return models.ExtremalFunction(alpha=alpha, exp=models.Exponent.from_p(2.0), kind=ef.KIND_F_AB_P2)


def build_weight_g(L: float, exp: models.Exponent) -> models.ExtremalFunction:
    alpha = services.roots.alpha_upper_weight(L, exp.p)
    root = models.AlphaRoot(alpha=alpha, bracket_lo=0.0, bracket_hi=math.pi / (4.0 * L), residual=0.0, L=L, q=exp.q)

    return models.ExtremalFunction(alpha=root, exp=exp, kind=ef.KIND_WEIGHT_G)


def build_power(exp: models.Exponent) -> models.ExtremalFunction:
    return models.ExtremalFunction(alpha=None, exp=exp, kind=ef.KIND_POWER)


def prefix_fstar(x: float, alpha: models.AlphaRoot, exp: models.Exponent) -> float:
    """q x^(1/q) sin(alpha ln x), the integral of f* over [1, x]"""
    if not x >= 1.0:
        raise services.errors.DomainError(f"x must lie in [1, b], got {x}")

    u = math.log(x)

    if u > alpha.L * (1.0 + 1e-12):
        raise services.errors.DomainError(f"x must lie in [1, b], got {x}")

    return float(models.ExtremalFunction(alpha=alpha, exp=exp, kind=ef.KIND_FSTAR).prefix(u))
