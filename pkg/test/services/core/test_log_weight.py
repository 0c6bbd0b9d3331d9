import math

import numpy as np
import pytest
import scipy.integrate

import models
import services.core
import services.errors


def test_log_weight_antiderivative_values(exp2: models.Exponent):
    assert services.core.log_weight_antiderivative(1.0, exp2) == 0.0
    assert services.core.log_weight_antiderivative(1.0, models.Exponent.from_p(7.0)) == 0.0

    assert services.core.log_weight_antiderivative(math.e, exp2) == pytest.approx(10.0 * math.sqrt(math.e) - 16.0, rel=1e-13)

    with pytest.raises(services.errors.DomainError):
        services.core.log_weight_antiderivative(0.5, exp2)


def test_log_weight_antiderivative_quadrature(exp3: models.Exponent):
    oracle, _ = scipy.integrate.quad(lambda x: math.log(x) ** 2 * x ** (-1.0 / 3.0), 1.0, 10.0, epsabs=0.0, epsrel=1e-13)

    assert services.core.log_weight_antiderivative(10.0, exp3) == pytest.approx(oracle, rel=1e-10)


@pytest.mark.parametrize("p", [2.0, 3.0, 7.5])
def test_log_weight_antiderivative_derivative(p: float):
    exp = models.Exponent.from_p(p)

    for k in np.geomspace(1.5, 1e6, 25):
        h = 1e-4 * k
        derivative = (services.core.log_weight_antiderivative(k + h, exp) - services.core.log_weight_antiderivative(k - h, exp)) / (2.0 * h)

        assert derivative == pytest.approx(math.log(k) ** 2 * k ** (-1.0 / p), rel=1e-6)


def test_log_weight_increment(exp3: models.Exponent):
    k = np.arange(1, 2001, dtype=float)
    direct = np.array([services.core.log_weight_antiderivative(x + 1.0, exp3) - services.core.log_weight_antiderivative(x, exp3) for x in k])

    assert np.allclose(services.core.log_weight_increment(k, exp3), direct, rtol=1e-10, atol=0.0)
    assert np.all(np.diff(np.cumsum(services.core.log_weight_increment(k, exp3))) > 0.0)
