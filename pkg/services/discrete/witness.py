import math

import numpy as np

import models
import models.witness_sequence as ws
import services.core
import services.errors
import services.roots


def _indices(n: int) -> np.ndarray:
    if n < 1:
        raise services.errors.DomainError(f"n must be at least 1, got {n}")

    return np.arange(1, n + 1, dtype=float)


def build_astar(n: int, exp: models.Exponent) -> models.WitnessSequence:
    """
    a*_k = F(k+1) - F(k) with F(x) = q x^(1/q) sin(alpha ln x), alpha solved for L = ln(n+1).

    The difference is expanded so that no two large values of F are subtracted.
    """
    k = _indices(n)
    root = services.roots.solve_alpha_extremal(math.log1p(n), exp.q)
    a, q = root.alpha, exp.q

    u0 = np.log(k)
    delta = np.log1p(1.0 / k)
    u1 = u0 + delta

    values = q * np.exp(u0 / q) * (np.expm1(delta / q) * np.sin(a * u1) + 2.0 * np.cos(0.5 * a * (u0 + u1)) * np.sin(0.5 * a * delta))

    return models.WitnessSequence(values=values, provenance=ws.PROVENANCE_ASTAR, params={"p": exp.p, "alpha": a, "L": root.L})


def build_mu_weight(n: int, exp: models.Exponent, A: float) -> models.WitnessSequence:
    """mu_k = (A k^(-1/p) - (I(k+1) - I(k))/ln^2(n+1))^(1/q)"""
    if not A > 2.0:
        raise services.errors.DomainError(f"A must exceed 2, got {A}")

    k = _indices(n)
    radicand = A * k ** (-1.0 / exp.p) - services.core.log_weight_increment(k, exp) / math.log1p(n) ** 2

    if not np.all(radicand > 0.0):
        raise services.errors.InvalidWeightError(f"mu radicand not positive for A={A} n={n}")

    return models.WitnessSequence(values=radicand ** (1.0 / exp.q), provenance=ws.PROVENANCE_MU_WEIGHT, params={"p": exp.p, "A": A})


def build_default_weight(n: int, exp: models.Exponent) -> models.WitnessSequence:
    k = _indices(n)

    return models.WitnessSequence(values=k ** (-1.0 / (exp.p * exp.q)), provenance=ws.PROVENANCE_DEFAULT_WEIGHT, params={"p": exp.p})
