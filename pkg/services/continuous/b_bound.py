import math

import numpy as np

import models
import services.optimize

GRID_POINTS = 1000


def b_sup(interval: models.Interval, exp: models.Exponent) -> float:
    """
    B = sup over a < x < b of (x - a)^(p-1) (x^(1-p) - b^(1-p)).

    With x = a e^u this is (1 - e^{-u})^(p-1) - (e^{-L}(e^u - 1))^(p-1), independent of scale.
    """
    L, s = interval.L, exp.p - 1.0

    def phi(u: float) -> float:
        return (-math.expm1(-u)) ** s - (math.exp(-L) * math.expm1(u)) ** s

    grid = np.linspace(0.0, L, GRID_POINTS + 2)[1:-1]
    values = (-np.expm1(-grid)) ** s - (np.exp(-L) * np.expm1(grid)) ** s

    _, value = services.optimize.grid_refine_max(phi, grid, values)

    return value


def b_bound_classical(interval: models.Interval, exp: models.Exponent) -> tuple[float, float]:
    """(B/(p-1), q^p B), the classical two-sided bound on d(a, b)"""
    B = b_sup(interval, exp)

    return B / (exp.p - 1.0), exp.qp * B
