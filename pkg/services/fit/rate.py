import dataclasses
import math

import numpy as np

import context
import log
import models
import services.core
import services.errors

MIN_POINTS = 5


@dataclasses.dataclass
class Struct:
    code: int
    fit: models.RateFit | None
    errors: list[str]


def design_matrix(n: np.ndarray, model: str) -> np.ndarray:
    """columns multiplying the coefficients of y = deficit ln^2(n + 1)"""
    log_n1 = np.log1p(np.asarray(n, dtype=float))

    if model == models.rate_fit.MODEL_C_OVER_LOG2:
        return np.ones((log_n1.size, 1))
    if model == models.rate_fit.MODEL_TWO_TERM:
        return np.stack([np.ones_like(log_n1), 1.0 / log_n1], axis=1)

    raise services.errors.DomainError(f"unknown rate model {model}")


def coefficient_names(model: str) -> list[str]:
    return ["c2"] if model == models.rate_fit.MODEL_C_OVER_LOG2 else ["c2", "c3"]


def reference_coefficient(p: float) -> float:
    return services.core.corollary_constant(p)


class FitRate:
    """
    Least squares fit of the deficit q^p - d_n to c2/ln^2(n + 1) (+ c3/ln^3(n + 1)).

    Unconverged rows are excluded and listed, at least 5 rows must remain.
    """

    def __init__(self, records: list[models.SweepRecord], p: float, model: str = models.rate_fit.MODEL_TWO_TERM):
        self._records = records
        self._p = p
        self._model = model

        self._logger = log.init("service")

    def call(self) -> Struct:
        struct = Struct(0, None, [])

        excluded = sorted(record.n for record in self._records if not record.converged)
        records = sorted((record for record in self._records if record.converged), key=lambda record: record.n)

        if excluded:
            self._logger.info(f"{context.rid_get()} {__name__} excluded unconverged n {excluded}")

        if len(records) < MIN_POINTS:
            raise services.errors.DomainError(f"rate fit needs at least {MIN_POINTS} points, got {len(records)}")

        n = np.array([record.n for record in records], dtype=float)
        deficit = np.array([record.deficit() for record in records])
        log_n1 = np.log1p(n)

        matrix = design_matrix(n, self._model)
        coefficients, *_ = np.linalg.lstsq(matrix, deficit * log_n1**2, rcond=None)

        # residual measured on the deficit itself, not on the scaled target
        predicted = (matrix @ coefficients) / log_n1**2
        residual_norm = float(np.linalg.norm(predicted - deficit))

        struct.fit = models.RateFit(
            model=self._model,
            p=self._p,
            coefficients=dict(zip(coefficient_names(self._model), (float(value) for value in coefficients))),
            residual_norm=residual_norm,
            n_min=int(n[0]),
            n_max=int(n[-1]),
            points=len(records),
            reference=reference_coefficient(self._p),
            excluded=excluded,
        )

        if not all(math.isfinite(value) for value in struct.fit.coefficients.values()):
            struct.code = 422
            struct.errors.append("rate fit coefficients are not finite")

        self._logger.info(f"{context.rid_get()} {__name__} p {self._p} model {self._model} coefficients {struct.fit.coefficients}")

        return struct
