import functools
import math

import numpy as np

import models
import services.core
import services.errors

# below this z the binomial remainder is summed as a series, above it through expm1
SERIES_CUTOFF = 1e-2
SERIES_TERMS = 16


def binomial_remainder(z: np.ndarray, r: float) -> np.ndarray:
    """(1 - z)^r - 1 + r z for 0 <= z < 1, without cancellation for small z"""
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)

    small = z < SERIES_CUTOFF
    big = ~small

    out[big] = np.expm1(r * np.log1p(-z[big])) + r * z[big]

    zs = z[small]
    acc = np.zeros_like(zs)
    coefficient = 1.0
    power = np.ones_like(zs)

    for j in range(1, SERIES_TERMS + 1):
        coefficient *= -(r - j + 1.0) / j
        power = power * zs
        if j >= 2:
            acc += coefficient * power

    out[small] = acc

    return out


def _log_scaled(lk: np.ndarray, r: float, A: float, log_n1: float) -> tuple[np.ndarray, np.ndarray]:
    """S0(z) and S1(z)/ln k with z = ln^2 k/(A ln^2(n + 1))"""
    z = lk * lk / (A * log_n1 * log_n1)
    s0 = binomial_remainder(z, r)
    s1_over_log = -r * lk / (A * log_n1 * log_n1) * np.expm1((r - 1.0) * np.log1p(-z))

    return s0, s1_over_log


@functools.lru_cache(maxsize=8)
def residual_table(p: float, A: float, n: int) -> np.ndarray:
    """
    Normalized residual of the weighted tail identity for every i in 1..n.

    The tail sum over k = i..n of k^(-1-1/q) [S0(z_k) - (2q/ln k) S1(z_k)] is compared with its
    main term q S0(z_i)/i^(1/q), where S0(z) = (1 - z)^r - 1 + r z and S1(z) = r z (1 - (1 - z)^(r-1)).
    The difference is divided by 1/(A^2 ln^2(n + 1) i^(1/q)) + 1/(A^2 n^(1/q)).
    """
    if not A > 1.0:
        raise services.errors.LemmaDomainError("A must be greater than 1")
    if not n >= 1:
        raise services.errors.LemmaDomainError("n must be at least 1")

    exp = models.Exponent.from_p(p)
    q, r = exp.q, exp.r

    k = np.arange(1, n + 1, dtype=float)
    lk = np.log(k)
    log_n1 = math.log(n + 1.0)

    s0, s1_over_log = _log_scaled(lk, r, A, log_n1)
    terms = k ** (-1.0 - 1.0 / q) * (s0 - 2.0 * q * s1_over_log)
    terms[0] = 0.0

    tail = services.core.compensated_suffix_sum(terms)
    main = q * k ** (-1.0 / q) * s0

    norm = 1.0 / (A * A * log_n1 * log_n1 * k ** (1.0 / q)) + 1.0 / (A * A * n ** (1.0 / q))

    return np.abs(tail - main) / norm


def residual(p: float, A: float, i: np.ndarray, n: int) -> np.ndarray:
    i = np.asarray(i, dtype=np.int64)

    if np.any((i < 1) | (i > n)):
        raise services.errors.LemmaDomainError("i must lie in [1, n]")

    return residual_table(float(p), float(A), int(n))[i - 1]
