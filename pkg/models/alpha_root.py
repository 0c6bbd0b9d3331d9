import dataclasses


@dataclasses.dataclass(frozen=True)
class AlphaRoot:
    """frequency solving a witness equation, with its bracket and residual"""

    alpha: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    L: float
    q: float
    iterations: int = 0
