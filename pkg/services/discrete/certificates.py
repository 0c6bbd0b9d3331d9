import math

import numpy as np

import models
import services.core
import services.errors
import services.discrete.operator


def _budget(value: float, n: int) -> float:
    return 16.0 * np.finfo(float).eps * (1.0 + math.log2(n)) * abs(value)


def _functional(weights: np.ndarray, inner: np.ndarray, exp: models.Exponent) -> np.ndarray:
    """
    M_i = weights_i^(-1) sum_{k >= i} k^(-p) S_k^(p/q) with S the prefix sums of inner.
    """
    k = np.arange(1, inner.size + 1, dtype=float)
    S = services.core.compensated_cumsum(inner)
    terms = np.exp(exp.r * np.log(S) - exp.p * np.log(k))

    return services.core.compensated_suffix_sum(terms) / weights


def _positive(seq, label: str) -> np.ndarray:
    values = services.discrete.operator.as_array(seq)

    if values.size == 0 or not np.all(values > 0.0):
        raise services.errors.WitnessInvalidError(f"{label} must be strictly positive")

    return values / values.max()


def lower_certificate_discrete(a, exp: models.Exponent) -> models.CertificateResult:
    """d_n >= min_i M_i with M_i = a_i^(-p/q) sum_{k >= i} k^(-p) (sum_{j <= k} a_j)^(p/q)"""
    values = _positive(a, "witness")
    witness = a.provenance if isinstance(a, models.WitnessSequence) else "custom"

    if values.size == 1:
        return models.CertificateResult(1.0, models.certificate_result.SIDE_LOWER, witness, 0.0, 1.0, 1)

    M = _functional(values**exp.r, values, exp)
    i = int(np.argmin(M))
    value = float(M[i])

    return models.CertificateResult(value, models.certificate_result.SIDE_LOWER, witness, _budget(value, values.size), float(i + 1), values.size)


def upper_certificate_discrete(mu, exp: models.Exponent) -> models.CertificateResult:
    """d_n <= max_i M_i with M_i = mu_i^(-p) sum_{k >= i} k^(-p) (sum_{j <= k} mu_j^q)^(p/q)"""
    values = _positive(mu, "weight")
    witness = mu.provenance if isinstance(mu, models.WitnessSequence) else "custom"

    if values.size == 1:
        return models.CertificateResult(1.0, models.certificate_result.SIDE_UPPER, witness, 0.0, 1.0, 1)

    M = _functional(values**exp.p, values**exp.q, exp)
    i = int(np.argmax(M))
    value = float(M[i])

    return models.CertificateResult(value, models.certificate_result.SIDE_UPPER, witness, _budget(value, values.size), float(i + 1), values.size)
