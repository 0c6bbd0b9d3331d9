import dataclasses
import math

import numpy as np
import scipy.integrate

import models
import services.errors
import services.quadrature

MAX_GRID = 2**16 + 1


@dataclasses.dataclass
class Ratio:
    value: float
    error_budget: float


def _check_tol(tol: float):
    if not (1e-12 <= tol <= 1e-4):
        raise services.errors.DomainError(f"tol must lie in [1e-12, 1e-4], got {tol}")


def ratio_continuous(f: models.ExtremalFunction, interval: models.Interval, tol: float = 1e-9) -> float:
    """
    Hardy ratio  int (x^-1 int_a^x f)^p dx / int f^p dx  of a witness over (a, b).

    Any positive f gives a lower bound for d(a, b).
    """
    return ratio_continuous_budget(f, interval, tol).value


def ratio_continuous_budget(f: models.ExtremalFunction, interval: models.Interval, tol: float = 1e-9) -> Ratio:
    _check_tol(tol)

    if f.has_closed_prefix():
        return _ratio_closed(f, interval.L, tol)

    return _ratio_generic(f, interval.L, tol)


def _combine(num: services.quadrature.QuadResult, den: services.quadrature.QuadResult) -> Ratio:
    if den.value <= 0.0:
        raise services.errors.WitnessInvalidError("witness has zero p-norm")

    value = num.value / den.value
    budget = abs(value) * (num.error / abs(num.value) + den.error / den.value) if num.value else den.error

    return Ratio(value, budget + 4.0 * np.finfo(float).eps * abs(value))


def _ratio_closed(f: models.ExtremalFunction, L: float, tol: float) -> Ratio:
    # in u = ln x the numerator is (e^(-u/q) F(u))^p and the denominator shape(u)^p
    p = f.exp.p
    floor = 1e-12 * (1.0 + f.frequency * f.exp.q)

    def den(u: float) -> float:
        h = float(f.shape(u))

        if h < -floor:
            raise services.errors.WitnessInvalidError(f"{f.describe()} is negative at u={u}")

        return max(h, 0.0) ** p

    def num(u: float) -> float:
        return max(float(f.scaled_prefix(u)), 0.0) ** p

    num_quad = services.quadrature.adaptive_simpson(num, 0.0, L, tol)
    den_quad = services.quadrature.adaptive_simpson(den, 0.0, L, tol)

    return _combine(num_quad, den_quad)


def _ratio_generic(f: models.ExtremalFunction, L: float, tol: float) -> Ratio:
    """
    Witness without a closed prefix: cumulative Simpson prefix on a uniform u-grid,
    doubled until the ratio moves by less than tol.
    """
    p = f.exp.p
    points = 257
    previous = None
    achieved = math.inf

    while points <= MAX_GRID:
        u = np.linspace(0.0, L, points)
        fu = f.value(u)

        if np.any(fu[:-1] <= 0.0) or fu[-1] < 0.0:
            raise services.errors.WitnessInvalidError(f"{f.describe()} is not positive on the grid")

        weight = np.exp(u)
        prefix = scipy.integrate.cumulative_simpson(fu * weight, x=u, initial=0.0)
        num = scipy.integrate.simpson((prefix / weight) ** p * weight, x=u)
        den = scipy.integrate.simpson(fu**p * weight, x=u)
        value = float(num / den)

        if previous is not None:
            achieved = abs(value - previous)

            if achieved <= tol:
                return Ratio(value, achieved)

        previous = value
        points = 2 * points - 1

    raise services.errors.QuadratureError(f"{f.describe()} ratio grid refinement stalled", achieved)
