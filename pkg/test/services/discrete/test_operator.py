import hypothesis
import hypothesis.extra.numpy as hnp
import hypothesis.strategies as st
import numpy as np
import pytest

import models
import services.discrete
import services.errors


def test_hardy_average():
    assert services.discrete.hardy_average([1.0, 1.0, 1.0]).tolist() == [1.0, 1.0, 1.0]
    assert np.allclose(services.discrete.hardy_average([1.0, 0.0, 0.0]), [1.0, 0.5, 1.0 / 3.0], rtol=1e-15)


def test_hardy_average_naive():
    rng = np.random.default_rng(5)
    a = rng.uniform(0.0, 1.0, 1000)

    naive = np.array([sum(a[: k + 1]) / (k + 1) for k in range(a.size)])

    assert np.allclose(services.discrete.hardy_average(a), naive, rtol=1e-12, atol=0.0)


def test_hardy_adjoint_average():
    y = np.array([1.0, 2.0, 3.0])

    assert np.allclose(services.discrete.hardy_adjoint_average(y), [1.0 + 1.0 + 1.0, 1.0 + 1.0, 1.0], rtol=1e-15)


def test_hardy_ratio_discrete(exp2: models.Exponent):
    assert services.discrete.hardy_ratio_discrete([3.7], exp2) == 1.0
    assert services.discrete.hardy_ratio_discrete([3.7], models.Exponent.from_p(7.0)) == 1.0
    assert services.discrete.hardy_ratio_discrete([1.0, 0.0], exp2) == pytest.approx(1.25, rel=1e-15)

    with pytest.raises(services.errors.DomainError):
        services.discrete.hardy_ratio_discrete([0.0, 0.0], exp2)


def test_hardy_ratio_astar_exact_bound(exp2: models.Exponent):
    for n in list(range(1, 101)) + [1_000, 10_000, 100_000]:
        astar = services.discrete.build_astar(n, exp2)
        alpha = astar.params["alpha"]
        bound = 4.0 / (1.0 + 4.0 * alpha**2)

        assert services.discrete.hardy_ratio_discrete(astar, exp2) >= bound * (1.0 - 1e-11)


@hypothesis.given(
    hnp.arrays(np.float64, st.integers(1, 50), elements=st.floats(min_value=1e-3, max_value=1e3)),
    st.floats(min_value=1e-6, max_value=1e6),
    st.sampled_from([2.0, 2.5, 3.0, 4.0]),
)
def test_hardy_ratio_scale_invariant(a: np.ndarray, c: float, p: float):
    exp = models.Exponent.from_p(p)

    assert services.discrete.hardy_ratio_discrete(c * a, exp) == pytest.approx(services.discrete.hardy_ratio_discrete(a, exp), rel=1e-13)
