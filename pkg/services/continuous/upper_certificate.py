import math

import numpy as np

import models
import services.continuous.tails
import services.continuous.witness
import services.errors
import services.optimize

GRID_POINTS = 2048


def weight_constant(p: float) -> float:
    """min{q^2, (pq - 1)/2}, the constant multiplying alpha^2 in the pointwise weight inequality"""
    q = p / (p - 1.0)

    return min(q * q, (p * q - 1.0) / 2.0)


def upper_bound(p: float, L: float) -> float:
    """
    q^p (1 + c/L^2)^(-1) with c = arctan^2(1/p) min{q^2, (pq - 1)/2}.

    alpha = arctan(1/p)/L turns the proved c alpha^2 into this c/L^2.
    """
    q = p / (p - 1.0)

    return q**p / (1.0 + math.atan(1.0 / p) ** 2 * weight_constant(p) / L**2)


def remark_bound(p: float, L: float) -> float:
    # arctan left unsquared, reported next to the proved bound and never asserted
    q = p / (p - 1.0)

    return q**p / (1.0 + math.atan(1.0 / p) * weight_constant(p) / L**2)


def upper_certificate_continuous(
    interval: models.Interval,
    exp: models.Exponent,
    tol: float = 1e-9,
    grid_points: int = GRID_POINTS,
) -> models.CertificateResult:
    """
    max over t of M(g, t) = g(t)^(-p) int_t^b (int_1^x g^q)^(p/q) x^(-p) dx, an upper bound for d(a, b).

    int_1^x g^q = K [x^(1/q)(cos + alpha q sin)(alpha ln x) - 1] with K = q/(1 + alpha^2 q^2), so in u = ln t
    M = K^(p/q) cos^(-p/q)(alpha u) int_u^L e^{-(v-u)/q} [cos + alpha q sin - e^{-v/q}]^(p/q)(v) dv.
    """
    if not exp.supported:
        raise services.errors.DomainError(f"upper certificate requires p >= 2, got {exp.p}")

    L = interval.L
    g = services.continuous.witness.build_weight_g(L, exp)
    a, q, r = g.frequency, exp.q, exp.r
    scale = (q / (1.0 + (a * q) ** 2)) ** r

    def kernel(v: float) -> float:
        # cos - 1 and 1 - e^{-v/q} rewritten to keep accuracy near v = 0
        w = -2.0 * math.sin(0.5 * a * v) ** 2 + a * q * math.sin(a * v) - math.expm1(-v / q)
        return max(w, 0.0) ** r

    grid = np.linspace(0.0, L, grid_points)
    tails = services.continuous.tails.tail_integrals(kernel, grid, L, q, tol)
    values = scale * np.cos(a * grid) ** -r * tails.values

    def functional(u: float) -> float:
        tail, _ = services.continuous.tails.tail_at(kernel, tails, u, q, tol / grid_points)
        return scale * math.cos(a * u) ** -r * tail

    location, value = services.optimize.grid_refine_max(functional, grid, values)

    j = int(np.argmin(np.abs(grid - location)))
    budget = scale * math.cos(a * location) ** -r * float(tails.errors[j]) + 8.0 * np.finfo(float).eps * value

    return models.CertificateResult(
        value=value,
        side=models.certificate_result.SIDE_UPPER,
        witness=g.describe(),
        error_budget=budget,
        extremizer_location=services.continuous.tails.point(interval.a, location),
        grid_points=grid_points,
        remark_bound=remark_bound(exp.p, L),
    )
