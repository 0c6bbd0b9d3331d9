import math

import numpy as np

import models
import services.core
import services.errors


def as_array(a) -> np.ndarray:
    if isinstance(a, models.WitnessSequence):
        return a.values

    return np.asarray(a, dtype=float)


def hardy_average(a) -> np.ndarray:
    """b_k = (1/k) sum_{j <= k} a_j in one compensated prefix pass"""
    a = as_array(a)

    return services.core.compensated_cumsum(a) / np.arange(1, a.size + 1, dtype=float)


def hardy_adjoint_average(y) -> np.ndarray:
    """z_j = sum_{k >= j} y_k / k, the transpose of the averaging map"""
    y = as_array(y)

    return services.core.compensated_suffix_sum(y / np.arange(1, y.size + 1, dtype=float))


def hardy_ratio_discrete(a, exp: models.Exponent) -> float:
    """sum (Ha)_k^p / sum a_k^p, a lower bound for d_n for any nonnegative a"""
    a = as_array(a)

    if a.size == 0 or np.any(a < 0.0) or not np.any(a > 0.0):
        raise services.errors.DomainError("ratio needs a nonnegative sequence that is not all zero")

    a = a / a.max()
    b = hardy_average(a)

    return math.fsum((b**exp.p).tolist()) / math.fsum((a**exp.p).tolist())
