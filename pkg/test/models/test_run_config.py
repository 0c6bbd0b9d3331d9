import pydantic
import pytest

import models


def test_run_config_defaults():
    config = models.RunConfig(command="discrete", n=100)

    assert config.p == 2.0
    assert config.discrete_tol() == 1e-10
    assert config.A_grid == [4.0, 8.0, 16.0, 32.0, 64.0]
    assert config.threads >= 1


def test_run_config_interval():
    assert models.RunConfig(command="alpha", L=3.0).L == 3.0
    assert models.RunConfig(command="continuous", a=2.0, b=8.0).continuous_tol() == 1e-9

    with pytest.raises(pydantic.ValidationError, match="L must be positive"):
        models.RunConfig(command="alpha", L=0.0)

    with pytest.raises(pydantic.ValidationError, match="0 < a < b"):
        models.RunConfig(command="continuous", a=5.0, b=2.0)

    with pytest.raises(pydantic.ValidationError, match="either L or both a and b"):
        models.RunConfig(command="alpha", a=1.0)


def test_run_config_invalid():
    with pytest.raises(pydantic.ValidationError, match="p must be greater than 1"):
        models.RunConfig(command="discrete", n=10, p=1.0)

    with pytest.raises(pydantic.ValidationError, match="n must be at least 1"):
        models.RunConfig(command="discrete", n=0)

    with pytest.raises(pydantic.ValidationError, match="tol must lie"):
        models.RunConfig(command="discrete", n=10, tol=1e-3)

    with pytest.raises(pydantic.ValidationError, match="at least 5 grid points"):
        models.RunConfig(command="rate", n_grid=[10, 20, 30, 40])

    with pytest.raises(pydantic.ValidationError, match="strictly increasing"):
        models.RunConfig(command="rate", n_grid=[10, 20, 20, 40, 50])

    with pytest.raises(pydantic.ValidationError, match="unknown lemma ids L2_16"):
        models.RunConfig(command="lemmas", ids=["L2_1", "L2_16"])

    with pytest.raises(pydantic.ValidationError, match="A_grid values must exceed 2"):
        models.RunConfig(command="discrete", n=10, A_grid=[2.0, 4.0])

    with pytest.raises(pydantic.ValidationError):
        models.RunConfig(command="discrete", n=10, colour="red")


def test_run_config_from_toml():
    config = models.RunConfig.from_toml("./data/config/sweep.toml", "rate", {"p": 3.0, "model": None})

    assert config.p == 3.0
    assert config.model == "two_term"
    assert config.n_grid[0] == 1000 and config.n_grid[-1] == 1_000_000
