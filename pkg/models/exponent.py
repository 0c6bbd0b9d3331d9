import pydantic

import services.errors


class Exponent(pydantic.BaseModel):
    """conjugate exponent pair p, q with 1/p + 1/q = 1"""

    model_config = pydantic.ConfigDict(frozen=True)

    p: float
    q: float
    qp: float
    supported: bool

    @classmethod
    def from_p(cls, p: float) -> "Exponent":
        if not p > 1.0:
            raise services.errors.DomainError(f"p must be greater than 1, got {p}")

        q = p / (p - 1.0)

        # theorems only cover p >= 2, smaller p is computed but flagged
        return cls(p=p, q=q, qp=q**p, supported=p >= 2.0)

    @property
    def r(self) -> float:
        """p/q, the exponent of the prefix in every certificate functional"""
        return self.p / self.q
