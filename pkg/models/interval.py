import math

import pydantic

import services.errors


class Interval(pydantic.BaseModel):
    """continuous domain (a, b), only the log-length L = ln(b/a) enters the constants"""

    model_config = pydantic.ConfigDict(frozen=True)

    a: float
    b: float
    L: float

    @classmethod
    def from_endpoints(cls, a: float, b: float) -> "Interval":
        if not (0.0 < a < b < math.inf):
            raise services.errors.DomainError(f"interval requires 0 < a < b < inf, got a={a} b={b}")

        return cls(a=a, b=b, L=math.log(b / a))

    @classmethod
    def from_log_length(cls, L: float) -> "Interval":
        if not (L > 0.0 and math.isfinite(L)):
            raise services.errors.DomainError("L must be positive")

        # b overflows past L ~ 709, formulas only read L
        b = math.exp(L) if L < 709.0 else math.inf

        return cls(a=1.0, b=b, L=L)

    def normalized(self) -> "Interval":
        """the scale-equivalent interval (1, b/a)"""
        return Interval.from_log_length(self.L)
