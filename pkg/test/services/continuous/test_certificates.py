import math

import pytest

import models
import services.continuous
import services.core
import services.errors


def test_lower_certificate_p2(exp2: models.Exponent):
    interval = models.Interval.from_log_length(math.pi)
    exact = services.continuous.exact_constant_p2(interval)

    lower = services.continuous.lower_certificate_continuous(interval, exp2)

    assert lower.side == models.certificate_result.SIDE_LOWER
    assert exact - 1e-6 <= lower.value <= exact + lower.error_budget + 1e-9
    assert lower.clipped_at == pytest.approx(math.pi * (1.0 - 1e-6))
    assert lower.grid_points == services.continuous.lower_certificate.GRID_POINTS


def test_lower_certificate_p4():
    exp = models.Exponent.from_p(4.0)
    L = 100.0

    lower = services.continuous.lower_certificate_continuous(models.Interval.from_log_length(L), exp)

    assert lower.value >= exp.qp * (1.0 - (exp.p * exp.q + 1.0) * math.pi**2 / L**2)
    assert lower.value < exp.qp


def test_upper_certificate_p2(exp2: models.Exponent):
    interval = models.Interval.from_log_length(math.pi)

    upper = services.continuous.upper_certificate_continuous(interval, exp2)

    assert upper.side == models.certificate_result.SIDE_UPPER
    assert upper.value >= services.continuous.exact_constant_p2(interval) - 1e-6
    assert upper.value < 4.0
    assert upper.remark_bound == pytest.approx(services.continuous.remark_bound(2.0, math.pi))


def test_upper_certificate_p3(exp3: models.Exponent):
    L = 30.0

    upper = services.continuous.upper_certificate_continuous(models.Interval.from_log_length(L), exp3)

    assert upper.value <= services.continuous.upper_bound(3.0, L) + 1e-6
    assert upper.value < exp3.qp


def test_upper_certificate_domain():
    with pytest.raises(services.errors.DomainError):
        services.continuous.upper_certificate_continuous(models.Interval.from_log_length(1.0), models.Exponent.from_p(1.5))


@pytest.mark.slow
@pytest.mark.parametrize("p", [2.0, 3.0, 4.0])
@pytest.mark.parametrize("L", [5.0, 30.0, 100.0])
def test_continuous_sandwich(p: float, L: float):
    exp = models.Exponent.from_p(p)
    interval = models.Interval.from_log_length(L)

    lower = services.continuous.lower_certificate_continuous(interval, exp)
    upper = services.continuous.upper_certificate_continuous(interval, exp)

    assert models.certificate_result.consistent(lower, upper)
    assert upper.value <= services.continuous.upper_bound(p, L) + 1e-6


@pytest.mark.slow
@pytest.mark.parametrize("p", [2.0, 2.5, 3.0, 4.0])
@pytest.mark.parametrize("L", [2.0, 5.0, math.pi**2])
def test_continuous_sandwich_grid(p: float, L: float):
    exp = models.Exponent.from_p(p)
    interval = models.Interval.from_log_length(L)

    lower = services.continuous.lower_certificate_continuous(interval, exp)
    upper = services.continuous.upper_certificate_continuous(interval, exp)

    assert models.certificate_result.consistent(lower, upper)
