import dataclasses
import math
import time

import context
import log
import models
import services.discrete
import services.errors

SANDWICH_SLACK = 1e-8


@dataclasses.dataclass
class Struct:
    code: int
    record: models.SweepRecord | None
    errors: list[str]


def sandwich_p2(n: int, dn: float, slack: float = SANDWICH_SLACK) -> tuple[bool, bool]:
    """
    (lower pass, upper pass) of the p = 2 bounds for n >= 3:
    4(1 - 4/(ln n + 4)) and 4 - 16 pi^2/ln^2(n+1) below, 4 - 32/(ln n + 4)^2 above.
    """
    ln_n = math.log(n)
    lower = max(4.0 * (1.0 - 4.0 / (ln_n + 4.0)), 4.0 - 16.0 * math.pi**2 / math.log1p(n) ** 2)
    upper = 4.0 - 32.0 / (ln_n + 4.0) ** 2

    return dn >= lower - slack, dn <= upper + slack


class DnBoundsReport:
    def __init__(
        self,
        n: int,
        exp: models.Exponent,
        tol: float = 1e-10,
        max_iter: int = 10_000,
        A_grid: list[float] | None = None,
        seed: int = 0,
        timing: bool = False,
    ):
        self._n = n
        self._exp = exp
        self._tol = tol
        self._max_iter = max_iter
        self._A_grid = A_grid if A_grid is not None else [4.0, 8.0, 16.0, 32.0, 64.0]
        self._seed = seed
        self._timing = timing

        self._logger = log.init("service")

    def call(self) -> Struct:
        struct = Struct(0, None, [])

        self._logger.info(f"{context.rid_get()} {__name__} n {self._n} p {self._exp.p}")

        t_start = time.monotonic()

        try:
            astar = services.discrete.build_astar(self._n, self._exp)
            lower = services.discrete.lower_certificate_discrete(astar, self._exp)
            power = services.discrete.dn_power_method(self._n, self._exp, self._tol, self._max_iter, self._seed)
            upper = self._upper_best()

            sandwich_lo, sandwich_hi = None, None

            if self._exp.p == 2.0 and self._n >= 3:
                sandwich_lo, sandwich_hi = sandwich_p2(self._n, power.value)

            seconds = time.monotonic() - t_start

            struct.record = models.SweepRecord(
                n=self._n,
                p=self._exp.p,
                alpha=astar.params["alpha"],
                dn_numeric=power.value,
                lower_cert=lower.value,
                upper_cert=upper.value,
                qp=self._exp.qp,
                sandwich_lo_pass=sandwich_lo,
                sandwich_hi_pass=sandwich_hi,
                iterations=power.iterations,
                residual=power.residual,
                seconds=seconds if self._timing else None,
                converged=power.converged,
                budget=lower.error_budget + upper.error_budget,
            )

            if not power.converged:
                struct.code = 422
                struct.errors.append(f"power method not converged n {self._n} p {self._exp.p}")
        except Exception as e:
            struct.code = 500
            struct.errors.append(str(e))
            self._logger.error(f"{context.rid_get()} {__name__} exception {e}")

        self._logger.info(f"{context.rid_get()} {__name__} n {self._n} code {struct.code} seconds {time.monotonic() - t_start:.3f}")

        return struct

    def _upper_best(self) -> models.CertificateResult:
        """smallest upper certificate over the default weight and the mu(A) scan"""
        best = services.discrete.upper_certificate_discrete(services.discrete.build_default_weight(self._n, self._exp), self._exp)

        for A in self._A_grid:
            try:
                mu = services.discrete.build_mu_weight(self._n, self._exp, A)
            except services.errors.InvalidWeightError as e:
                self._logger.info(f"{context.rid_get()} {__name__} skip A {A} {e}")
                continue

            cert = services.discrete.upper_certificate_discrete(mu, self._exp)

            if cert.value < best.value:
                best = cert

        return best
