import math

import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

import services.core
import services.errors


def test_compensated_sum():
    assert services.core.compensated_sum([1.0, 1.0, 1.0]) == 3.0
    assert services.core.compensated_sum([1e16, 1.0, -1e16]) == 1.0
    assert services.core.compensated_sum(np.full(1_000_000, 0.1)) == pytest.approx(100_000.0, abs=1e-9)


def test_compensated_sum_overflow():
    with pytest.raises(services.errors.SummationOverflowError):
        services.core.compensated_sum([1e308, 1e308])


@hypothesis.given(st.lists(st.floats(min_value=-1e12, max_value=1e12), min_size=1, max_size=200))
def test_compensated_sum_matches_fsum(values: list[float]):
    assert services.core.compensated_sum(values) == pytest.approx(math.fsum(values), rel=1e-15, abs=1e-3)


def test_compensated_cumsum():
    rng = np.random.default_rng(7)
    values = rng.uniform(-1.0, 1.0, 5000)

    prefix = services.core.compensated_cumsum(values, block=64)

    for j in (0, 63, 64, 1000, 4999):
        assert prefix[j] == pytest.approx(math.fsum(values[: j + 1].tolist()), abs=1e-12)


def test_compensated_suffix_sum():
    values = np.arange(1, 11, dtype=float)
    suffix = services.core.compensated_suffix_sum(values, block=3)

    assert suffix.tolist() == [55.0, 54.0, 52.0, 49.0, 45.0, 40.0, 34.0, 27.0, 19.0, 10.0]
