import math
import typing

import numpy as np

import services.errors

BLOCK_SIZE = 1024


class NeumaierSum:
    """
    Running sum with a compensation term (Neumaier's variant of Kahan summation).

    Unlike plain Kahan it stays exact when an added value is larger than the running sum,
    e.g. [1e16, 1, -1e16] sums to 1.
    """

    def __init__(self):
        self.sum = 0.0
        self.carry = 0.0

    def add(self, value: float):
        total = self.sum + value

        if abs(self.sum) >= abs(value):
            self.carry += (self.sum - total) + value
        else:
            self.carry += (value - total) + self.sum

        self.sum = total

    @property
    def value(self) -> float:
        return self.sum + self.carry


def _finite(value: float) -> float:
    if not math.isfinite(value):
        raise services.errors.SummationOverflowError(f"compensated sum is not finite ({value})")

    return value


def compensated_sum(values: typing.Iterable[float]) -> float:
    if isinstance(values, np.ndarray):
        values = values.tolist()

    acc = NeumaierSum()

    for value in values:
        acc.add(float(value))

    return _finite(acc.value)


def compensated_cumsum(values: np.ndarray, block: int = BLOCK_SIZE) -> np.ndarray:
    """
    Prefix sums in fixed block order.

    Each block is scanned with a plain cumsum on top of an offset that is the correctly
    rounded sum of all earlier blocks, so rounding error does not grow with n.
    """
    values = np.asarray(values, dtype=float)
    out = np.empty_like(values)
    offset = NeumaierSum()

    for start in range(0, values.size, block):
        chunk = values[start : start + block]
        out[start : start + chunk.size] = np.cumsum(chunk) + offset.value
        offset.add(math.fsum(chunk.tolist()))

    if not np.all(np.isfinite(out)):
        raise services.errors.SummationOverflowError("compensated prefix sum is not finite")

    return out


def compensated_suffix_sum(values: np.ndarray, block: int = BLOCK_SIZE) -> np.ndarray:
    """out[i] = sum of values[i:], accumulated from the tail"""
    values = np.asarray(values, dtype=float)

    return compensated_cumsum(values[::-1], block=block)[::-1].copy()
