import os

import pytest

import dot_init  # noqa: F401
import models
import services.sweep

# keep test runs away from any cache configured in .env
os.environ.pop(services.sweep.cache.ENV_PATH, None)


@pytest.fixture(scope="session")
def exp2() -> models.Exponent:
    return models.Exponent.from_p(2.0)


@pytest.fixture(scope="session")
def exp3() -> models.Exponent:
    return models.Exponent.from_p(3.0)


@pytest.fixture(scope="function")
def cache_file(tmp_path, monkeypatch) -> str:
    path = str(tmp_path / "dn_cache.csv")
    monkeypatch.setenv(services.sweep.cache.ENV_PATH, path)

    return path
