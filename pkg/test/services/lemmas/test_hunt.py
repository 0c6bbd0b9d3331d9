import math

import pytest

import models
import services.lemmas

STRICT_IDS = [id for id in models.run_config.LEMMA_IDS if id != "L2_15"]


def test_hunt_l2_1():
    struct = services.lemmas.Hunt("L2_1", samples=10_000, seed=42).call()

    assert struct.code == 0
    assert struct.summary.failures == 0
    assert struct.summary.min_margin >= 0.0
    assert set(struct.summary.worst_sample) == {"x", "alpha"}


@pytest.mark.parametrize("id", STRICT_IDS)
def test_hunt_strict(id: str):
    struct = services.lemmas.Hunt(id, samples=2_000, seed=7).call()

    assert struct.code == 0, struct.errors
    assert struct.summary.failures == 0
    assert struct.summary.strictness == "strict"


def test_hunt_l2_10_positive():
    struct = services.lemmas.Hunt("L2_10", samples=5_000, seed=3).call()

    assert struct.summary.min_margin > 0.0


def test_hunt_deterministic():
    first = services.lemmas.Hunt("L2_7", samples=1_000, seed=42).call().summary
    second = services.lemmas.Hunt("L2_7", samples=1_000, seed=42, threads=4).call().summary

    assert first.min_margin == second.min_margin
    assert first.worst_sample == second.worst_sample


def test_hunt_unknown_id():
    struct = services.lemmas.Hunt("L2_99", samples=10).call()

    assert struct.code == 500
    assert struct.summary is None


@pytest.mark.slow
def test_hunt_diagnostic():
    struct = services.lemmas.Hunt("L2_15", samples=2_000, seed=42).call()

    assert struct.code == 0
    assert struct.summary.strictness == "diagnostic"
    assert math.isfinite(struct.summary.calibrated)


@pytest.mark.slow
@pytest.mark.parametrize("id", STRICT_IDS)
@pytest.mark.parametrize("seed", [42, 43])
def test_hunt_strict_full(id: str, seed: int):
    struct = services.lemmas.Hunt(id, samples=100_000, seed=seed).call()

    assert struct.code == 0, struct.errors
