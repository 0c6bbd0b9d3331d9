import numpy as np
import pytest

import services.errors
import services.lemmas.diagnostic as diagnostic


@pytest.mark.parametrize("r", [1.0, 1.5, 2.0, 7.0])
def test_binomial_remainder(r: float):
    z = np.array([0.0, 1e-8, 1e-4, 5e-3, 0.02, 0.3, 0.9])

    direct = (1.0 - z) ** r - 1.0 + r * z

    assert np.allclose(diagnostic.binomial_remainder(z, r), direct, rtol=1e-6, atol=1e-15)
    assert diagnostic.binomial_remainder(np.array([1e-4]), r)[0] == pytest.approx(0.5 * r * (r - 1.0) * 1e-8, rel=1e-3, abs=1e-20)


def test_residual_table():
    values = diagnostic.residual_table(2.0, 4.0, 1000)

    assert values.shape == (1000,)
    assert np.all(np.isfinite(values))
    assert np.all(values >= 0.0)


def test_residual_domain():
    with pytest.raises(services.errors.LemmaDomainError):
        diagnostic.residual(2.0, 4.0, np.array([0]), 10)

    with pytest.raises(services.errors.LemmaDomainError):
        diagnostic.residual(2.0, 0.5, np.array([1]), 10)
