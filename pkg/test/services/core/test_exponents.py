import math

import hypothesis
import hypothesis.strategies as st
import pytest

import services.core
import services.errors


def test_conjugate():
    assert services.core.conjugate(2.0) == 2.0
    assert services.core.conjugate(4.0) == pytest.approx(4.0 / 3.0, rel=1e-15)
    assert services.core.conjugate(3.0) == pytest.approx(1.5, rel=1e-15)

    with pytest.raises(services.errors.DomainError):
        services.core.conjugate(1.0)

    with pytest.raises(services.errors.DomainError):
        services.core.conjugate(0.5)


@hypothesis.given(st.floats(min_value=1.001, max_value=64.0))
def test_conjugate_symmetry(p: float):
    q = services.core.conjugate(p)

    assert 1.0 / p + 1.0 / q == pytest.approx(1.0, abs=1e-14)
    assert services.core.conjugate(q) == pytest.approx(p, rel=1e-12)


def test_hardy_constant():
    assert services.core.hardy_constant(2.0) == 4.0
    assert services.core.hardy_constant(3.0) == pytest.approx(3.375, rel=1e-15)
    assert math.e < services.core.hardy_constant(1000.0) < math.e + 0.01

    with pytest.raises(services.errors.DomainError):
        services.core.hardy_constant(1.0)


def test_hardy_constant_decreasing():
    values = [services.core.hardy_constant(2.0 + 0.25 * i) for i in range(200)]

    assert all(a > b for a, b in zip(values, values[1:]))


def test_maximal_and_corollary_constants():
    assert services.core.maximal_constant(3.0) == services.core.hardy_constant(3.0)
    assert services.core.corollary_constant(2.0) == pytest.approx(16.0 * math.pi**2, rel=1e-15)


def test_threshold_log():
    # p = 3, eps = 1 puts b0 near 3e7
    assert math.exp(services.core.threshold_log(3.0, 1.0)) == pytest.approx(3e7, rel=0.2)

    # smaller eps pushes the threshold out
    assert services.core.threshold_log(3.0, 0.1) > services.core.threshold_log(3.0, 1.0)

    with pytest.raises(services.errors.DomainError):
        services.core.threshold_log(3.0, 0.0)
