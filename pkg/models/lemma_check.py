import dataclasses
import typing

STRICT: typing.Final = "strict"
DIAGNOSTIC: typing.Final = "diagnostic"


@dataclasses.dataclass(frozen=True)
class LemmaCheck:
    """
    One evaluation of an auxiliary inequality.

    margin is the signed slack, oriented so margin >= 0 means the inequality holds.
    For diagnostic checks margin carries the normalized residual instead.
    """

    id: str
    sample: dict
    holds: bool
    margin: float
    strictness: str
    lhs: float = 0.0
    rhs: float = 0.0
