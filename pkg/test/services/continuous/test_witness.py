import math

import numpy as np
import pytest
import scipy.integrate

import models
import services.continuous
import services.errors


def test_fstar_positive_and_vanishing(exp3: models.Exponent):
    for L in (0.5, math.pi, 30.0):
        fstar = services.continuous.build_fstar(L, exp3)
        u = np.linspace(0.0, L, 1000)

        assert np.all(fstar.value(u[:-1]) > 0.0)
        assert abs(fstar.shape(np.array([L]))[0]) <= 1e-12


def test_weight_g_positive(exp3: models.Exponent):
    g = services.continuous.build_weight_g(10.0, exp3)
    u = np.linspace(0.0, 10.0, 1000)

    assert np.all(np.cos(g.frequency * u) > 0.0)
    assert np.all(g.value(u) > 0.0)
    assert not g.has_closed_prefix()


def test_prefix_fstar(exp2: models.Exponent):
    L = math.pi
    fstar = services.continuous.build_fstar(L, exp2)
    alpha = fstar.alpha

    assert services.continuous.prefix_fstar(1.0, alpha, exp2) == 0.0

    peak = math.exp(math.pi / (2.0 * alpha.alpha))
    assert services.continuous.prefix_fstar(peak, alpha, exp2) == pytest.approx(2.0 * peak**0.5, rel=1e-14)

    with pytest.raises(services.errors.DomainError):
        services.continuous.prefix_fstar(0.5, alpha, exp2)

    with pytest.raises(services.errors.DomainError):
        services.continuous.prefix_fstar(math.exp(L) * 1.01, alpha, exp2)


@pytest.mark.parametrize("p", [2.0, 3.0])
def test_prefix_fstar_quadrature(p: float):
    exp = models.Exponent.from_p(p)
    L = math.pi
    fstar = services.continuous.build_fstar(L, exp)
    a, q = fstar.frequency, exp.q

    def f(x: float) -> float:
        u = math.log(x)
        return x ** (-1.0 / p) * (a * q * math.cos(a * u) + math.sin(a * u))

    rng = np.random.default_rng(3)

    for x in np.exp(rng.uniform(0.0, L, 100)):
        oracle, _ = scipy.integrate.quad(f, 1.0, x, epsabs=0.0, epsrel=1e-13, limit=200)
        assert services.continuous.prefix_fstar(x, fstar.alpha, exp) == pytest.approx(oracle, rel=1e-9)


def test_closed_prefix_matches_fstar(exp3: models.Exponent):
    fstar = services.continuous.build_fstar(5.0, exp3)
    u = np.linspace(0.0, 5.0, 7)

    closed = exp3.q * np.exp(u / exp3.q) * np.sin(fstar.frequency * u)

    assert np.allclose(fstar.prefix(u), closed, rtol=1e-13, atol=0.0)
    assert np.allclose(fstar.scaled_prefix(u), closed * np.exp(-u / exp3.q), rtol=1e-13, atol=0.0)
