import dataclasses
import math

import numpy as np

import log
import models
import models.witness_sequence as ws
import services.discrete.operator as operator
import services.errors

MONOTONE_SLACK = 1e-12

logger = log.init("service")


@dataclasses.dataclass
class PowerResult:
    value: float
    witness: models.WitnessSequence
    iterations: int
    residual: float
    converged: bool


def _pnorm_normalize(a: np.ndarray, p: float) -> np.ndarray:
    a = a / a.max()

    return a / math.fsum((a**p).tolist()) ** (1.0 / p)


def _objective(y: np.ndarray, p: float) -> float:
    return math.fsum((y**p).tolist())


def _iterate(a: np.ndarray, exp: models.Exponent, tol: float, max_iter: int) -> PowerResult:
    """
    Nonlinear power iteration for the p-norm of the averaging operator.

    a <- (H^T (Ha)^(p-1))^(1/(p-1)) normalized in l^p; for nonnegative kernels the
    objective sum (Ha)^p is nondecreasing along the iteration.
    """
    p = exp.p
    a = _pnorm_normalize(a, p)
    y = operator.hardy_average(a)
    value = _objective(y, p)
    residual = math.inf
    iterations = 0

    while iterations < max_iter:
        iterations += 1

        z = operator.hardy_adjoint_average(y ** (p - 1.0))
        a_next = _pnorm_normalize(z ** (1.0 / (p - 1.0)), p)
        y = operator.hardy_average(a_next)
        value_next = _objective(y, p)

        assert value_next >= value * (1.0 - MONOTONE_SLACK), f"power method ratio decreased {value} -> {value_next}"

        residual = float(np.linalg.norm(a_next - a) / np.linalg.norm(a))
        change = abs(value_next - value) / value_next
        a, value = a_next, value_next

        if change < tol and residual < math.sqrt(tol):
            return PowerResult(value, _witness(a, p), iterations, residual, True)

    return PowerResult(value, _witness(a, p), iterations, residual, False)


def _witness(a: np.ndarray, p: float) -> models.WitnessSequence:
    return models.WitnessSequence(values=a, provenance=ws.PROVENANCE_POWER_METHOD, params={"p": p})


def dn_power_method(
    n: int,
    exp: models.Exponent,
    tol: float = 1e-10,
    max_iter: int = 10_000,
    seed: int = 0,
) -> PowerResult:
    """
    d_n as the maximum Hardy ratio, from two starts: k^(-1/p) and a seeded random
    positive vector. The larger value wins.
    """
    if n < 1:
        raise services.errors.DomainError(f"n must be at least 1, got {n}")
    if not (1e-13 <= tol <= 1e-6):
        raise services.errors.DomainError(f"tol must lie in [1e-13, 1e-6], got {tol}")

    if n == 1:
        return PowerResult(1.0, _witness(np.ones(1), exp.p), 1, 0.0, True)

    k = np.arange(1, n + 1, dtype=float)
    rng = np.random.default_rng(seed)

    results = [
        _iterate(k ** (-1.0 / exp.p), exp, tol, max_iter),
        _iterate(rng.uniform(0.1, 1.0, n), exp, tol, max_iter),
    ]

    best = max(results, key=lambda result: result.value)

    if not best.converged:
        logger.warning(f"{__name__} n {n} p {exp.p} not converged after {best.iterations} iterations")

    return best
