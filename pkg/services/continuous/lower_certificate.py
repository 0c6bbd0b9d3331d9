import math

import numpy as np

import models
import services.continuous.tails
import services.continuous.witness
import services.optimize

GRID_POINTS = 2048
CLIP = 1e-6


def lower_certificate_continuous(
    interval: models.Interval,
    exp: models.Exponent,
    tol: float = 1e-9,
    grid_points: int = GRID_POINTS,
) -> models.CertificateResult:
    """
    min over t of M(t) = f*(t)^(-p/q) int_t^b (int_1^x f*)^(p/q) x^(-p) dx, a lower bound for d(a, b).

    In u = ln t this is q^(p/q) h(u)^(-p/q) int_u^L e^{-(v-u)/q} sin^(p/q)(alpha v) dv.
    f*(b) = 0 makes M(b) a 0/0 form, so t is searched on u <= L(1 - 1e-6).
    """
    L = interval.L
    fstar = services.continuous.witness.build_fstar(L, exp)
    a, q, r = fstar.frequency, exp.q, exp.r
    scale = q**r

    def kernel(v: float) -> float:
        return max(math.sin(a * v), 0.0) ** r

    def h(u: float) -> float:
        return a * q * math.cos(a * u) + math.sin(a * u)

    clip = L * (1.0 - CLIP)
    grid = np.linspace(0.0, clip, grid_points)
    tails = services.continuous.tails.tail_integrals(kernel, grid, L, q, tol)

    hs = a * q * np.cos(a * grid) + np.sin(a * grid)
    values = scale * hs**-r * tails.values[:grid_points]

    def functional(u: float) -> float:
        tail, _ = services.continuous.tails.tail_at(kernel, tails, u, q, tol / grid_points)
        return scale * h(u) ** -r * tail

    location, value = services.optimize.grid_refine_min(functional, grid, values)

    j = int(np.argmin(np.abs(grid - location)))
    budget = scale * h(location) ** -r * float(tails.errors[j]) + 8.0 * np.finfo(float).eps * value

    return models.CertificateResult(
        value=value,
        side=models.certificate_result.SIDE_LOWER,
        witness=fstar.describe(),
        error_budget=budget,
        extremizer_location=services.continuous.tails.point(interval.a, location),
        grid_points=grid_points,
        clipped_at=clip,
    )
