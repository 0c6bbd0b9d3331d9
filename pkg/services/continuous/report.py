import dataclasses
import time

import context
import log
import models
import services.continuous
import services.core
import services.errors


@dataclasses.dataclass
class Struct:
    code: int
    report: dict
    errors: list[str]


class Report:
    def __init__(self, interval: models.Interval, exp: models.Exponent, tol: float):
        self._interval = interval
        self._exp = exp
        self._tol = tol

        self._logger = log.init("service")

    def call(self) -> Struct:
        struct = Struct(0, {}, [])

        self._logger.info(f"{context.rid_get()} {__name__} p {self._exp.p} L {self._interval.L}")

        t_start = time.monotonic()

        try:
            normalized = self._interval.normalized()
            lower = services.continuous.lower_certificate_continuous(normalized, self._exp, self._tol)
            upper = services.continuous.upper_certificate_continuous(normalized, self._exp, self._tol)
            b_lower, b_upper = services.continuous.b_bound_classical(normalized, self._exp)

            struct.report = {
                "p": self._exp.p,
                "a": self._interval.a,
                "b": self._interval.b,
                "L": self._interval.L,
                "lower": lower.value,
                "upper": upper.value,
                "exact_p2": services.continuous.exact_constant_p2(normalized) if self._exp.p == 2.0 else None,
                "maximal": services.core.maximal_constant(self._exp.p),
                "B_lower": b_lower,
                "B_upper": b_upper,
                "budgets": {"lower": lower.error_budget, "upper": upper.error_budget},
            }

            if not models.certificate_result.consistent(lower, upper):
                struct.code = 422
                struct.errors.append(f"lower certificate {lower.value} above upper {upper.value}")
        except services.errors.QuadratureError as e:
            struct.code = 422
            struct.errors.append(str(e))
            self._logger.error(f"{context.rid_get()} {__name__} error {e}")
        except Exception as e:
            struct.code = 500
            struct.errors.append(str(e))
            self._logger.error(f"{context.rid_get()} {__name__} exception {e}")

        self._logger.info(f"{context.rid_get()} {__name__} code {struct.code} seconds {time.monotonic() - t_start:.3f}")

        return struct
