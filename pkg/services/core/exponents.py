import math

import services.errors


def conjugate(p: float) -> float:
    if not p > 1.0:
        raise services.errors.DomainError(f"p must be greater than 1, got {p}")

    return p / (p - 1.0)


def hardy_constant(p: float) -> float:
    """(p/(p-1))^p, the sharp constant on the half line"""
    return conjugate(p) ** p


def maximal_constant(p: float) -> float:
    # the one-sided maximal variant keeps q^p on every (0, b), reported only
    return hardy_constant(p)


def corollary_constant(p: float) -> float:
    """reference bound q^(p+1) p pi^2 on the ln^-2 deficit coefficient, 16 pi^2 at p = 2"""
    q = conjugate(p)

    return q ** (p + 1.0) * p * math.pi**2


def threshold_log(p: float, eps: float) -> float:
    """
    ln b0(eps), the log-length beyond which the lower pointwise inequality holds.

    b0 itself overflows for large p, so only its log is returned.
    """
    if not (0.0 < eps <= 1.0):
        raise services.errors.DomainError(f"eps must lie in (0, 1], got {eps}")

    q = conjugate(p)

    terms = [4.0 / (p * q) ** 2]

    if p - q > 0.0:
        terms.append(q / ((p - q) * (p * q + 1.0) ** 2))

    return math.pi / math.sqrt(min(terms) * eps)
