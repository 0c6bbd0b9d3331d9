import math

import numpy as np

import log
import models
import services.errors
import services.roots.bracket

RESIDUAL_TOL = 1e-13
BRACKET_SHRINK = 1e-12

logger = log.init("service")


def _h(alpha: float, L: float, q: float) -> float:
    return math.sin(alpha * L) + alpha * q * math.cos(alpha * L)


def solve_alpha_extremal(L: float, q: float) -> models.AlphaRoot:
    """
    The unique root of tan(alpha L) + alpha q = 0 in (pi/(2L), pi/L).

    Solved as the zero of h(alpha) = sin(alpha L) + alpha q cos(alpha L), which has no pole
    at the left end of the bracket. h > 0 at the left end and h < 0 at the right end.
    """
    if not (L > 0.0 and math.isfinite(L)):
        raise services.errors.DomainError("L must be positive")
    if not q > 1.0:
        raise services.errors.DomainError(f"q must be greater than 1, got {q}")

    bracket_lo, bracket_hi = math.pi / (2.0 * L), math.pi / L
    shrink = BRACKET_SHRINK * (bracket_hi - bracket_lo)
    lo, hi = bracket_lo + shrink, bracket_hi - shrink

    assert _h(lo, L, q) > 0.0 > _h(hi, L, q), f"alpha bracket lost its sign change L={L} q={q}"

    result = services.roots.bracket.bisect_secant(lambda alpha: _h(alpha, L, q), lo, hi, ftol=RESIDUAL_TOL)

    if not result.converged:
        logger.debug(f"{__name__} alpha residual {result.residual:.3e} above {RESIDUAL_TOL} L={L} q={q}")

    return models.AlphaRoot(
        alpha=result.root,
        bracket_lo=bracket_lo,
        bracket_hi=bracket_hi,
        residual=result.residual,
        L=L,
        q=q,
        iterations=result.iterations,
    )


def solve_alpha_p2(L: float) -> models.AlphaRoot:
    return solve_alpha_extremal(L, 2.0)


def alpha_upper_weight(L: float, p: float) -> float:
    if not (L > 0.0 and math.isfinite(L)):
        raise services.errors.DomainError("L must be positive")
    if not p >= 2.0:
        raise services.errors.DomainError(f"upper weight requires p >= 2, got {p}")

    return math.atan(1.0 / p) / L


def solve_alpha_extremal_array(L: np.ndarray, q: np.ndarray, iterations: int = 100) -> np.ndarray:
    """
    Elementwise roots for many (L, q) pairs by fixed-count vectorized bisection.

    Used by lemma hunts, 100 halvings collapse every bracket to adjacent floats.
    """
    L = np.asarray(L, dtype=float)
    q = np.asarray(q, dtype=float)

    if np.any(L <= 0.0):
        raise services.errors.DomainError("L must be positive")

    lo = np.pi / (2.0 * L)
    hi = np.pi / L
    shrink = BRACKET_SHRINK * (hi - lo)
    lo, hi = lo + shrink, hi - shrink

    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        h_mid = np.sin(mid * L) + mid * q * np.cos(mid * L)
        positive = h_mid > 0.0
        lo = np.where(positive, mid, lo)
        hi = np.where(positive, hi, mid)

    return 0.5 * (lo + hi)
