import dataclasses
import typing

SIDE_LOWER: typing.Final = "lower"
SIDE_UPPER: typing.Final = "upper"


@dataclasses.dataclass(frozen=True)
class CertificateResult:
    """one-sided bound on a sharp constant and where its functional was extremal"""

    value: float
    side: str
    witness: str
    error_budget: float
    extremizer_location: float
    grid_points: int = 0
    clipped_at: float | None = None
    remark_bound: float | None = None

    def __post_init__(self):
        if self.error_budget < 0.0:
            raise ValueError(f"error budget must be nonnegative, got {self.error_budget}")
        if self.side not in (SIDE_LOWER, SIDE_UPPER):
            raise ValueError(f"invalid side {self.side}")


def consistent(lower: CertificateResult, upper: CertificateResult) -> bool:
    """paired results must satisfy lower <= upper up to both budgets"""
    return lower.value <= upper.value + lower.error_budget + upper.error_budget
