import math

import numpy as np

import models
import services.errors


def _poly(u, q: float):
    return u * u - 2.0 * q * u + 2.0 * q * q


def log_weight_antiderivative(k: float, exp: models.Exponent) -> float:
    """
    I(k) = q k^(1/q) (ln^2 k - 2q ln k + 2q^2) - 2q^3, the integral of ln^2 x x^(-1/p) over [1, k].
    """
    if not k >= 1.0:
        raise services.errors.DomainError(f"k must be at least 1, got {k}")

    q = exp.q
    u = math.log(k)

    # written as q (e^(u/q) - 1) P(u) + q (P(u) - P(0)) to avoid cancellation near k = 1
    return q * math.expm1(u / q) * _poly(u, q) + q * u * (u - 2.0 * q)


def log_weight_increment(k: np.ndarray, exp: models.Exponent) -> np.ndarray:
    """
    I(k+1) - I(k) for integer k >= 1, without subtracting the two large values.
    """
    k = np.asarray(k, dtype=float)

    if np.any(k < 1.0):
        raise services.errors.DomainError("k must be at least 1")

    q = exp.q
    u0 = np.log(k)
    delta = np.log1p(1.0 / k)
    u1 = u0 + delta

    return q * np.exp(u0 / q) * (np.expm1(delta / q) * _poly(u1, q) + delta * (u1 + u0 - 2.0 * q))
