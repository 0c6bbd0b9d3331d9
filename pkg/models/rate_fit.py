import typing

import pydantic

MODEL_C_OVER_LOG2: typing.Final = "c_over_log2"
MODEL_TWO_TERM: typing.Final = "two_term"

MODELS = [MODEL_C_OVER_LOG2, MODEL_TWO_TERM]


class RateFit(pydantic.BaseModel):
    """least squares fit of the deficit q^p - d_n against powers of 1/ln(n+1)"""

    model_config = pydantic.ConfigDict(frozen=True)

    model: typing.Literal["c_over_log2", "two_term"]
    p: float
    coefficients: dict[str, float]
    residual_norm: float
    n_min: int
    n_max: int
    points: int
    reference: float | None = None
    excluded: list[int] = []
