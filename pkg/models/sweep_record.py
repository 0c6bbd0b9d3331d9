import pydantic

# csv column order, shared by output files and the rate fitter
COLUMNS = [
    "n",
    "p",
    "alpha",
    "dn_numeric",
    "lower_cert",
    "upper_cert",
    "qp",
    "sandwich_lo_pass",
    "sandwich_hi_pass",
    "iterations",
    "residual",
    "seconds",
]


class SweepRecord(pydantic.BaseModel):
    """one (n, p) row of the discrete problem"""

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    p: float
    alpha: float
    dn_numeric: float
    lower_cert: float
    upper_cert: float
    qp: float
    sandwich_lo_pass: bool | None = None
    sandwich_hi_pass: bool | None = None
    iterations: int
    residual: float
    seconds: float | None = None
    converged: bool = True
    budget: float = 0.0

    def ordered(self, slack: float = 1e-9) -> bool:
        """lower_cert <= dn_numeric <= upper_cert within slack plus budgets"""
        tol = slack + self.budget + self.residual

        return self.lower_cert <= self.dn_numeric + tol and self.dn_numeric <= self.upper_cert + tol

    def deficit(self) -> float:
        return self.qp - self.dn_numeric
