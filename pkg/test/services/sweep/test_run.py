import pytest

import models
import services.discrete
import services.sweep


def test_geometric_grid():
    grid = services.sweep.geometric_grid(1_000, 1_000_000, 4)

    assert grid == [1_000, 10_000, 100_000, 1_000_000]

    with pytest.raises(ValueError):
        services.sweep.geometric_grid(10, 5, 3)


def test_sweep_in_order(exp2: models.Exponent):
    grid = [50, 10, 200, 3]

    inline = services.sweep.Sweep(grid, exp2, threads=1).call()
    pooled = services.sweep.Sweep(grid, exp2, threads=3).call()

    assert inline.code == 0
    assert [record.n for record in inline.records] == grid
    assert services.sweep.render_records(inline.records) == services.sweep.render_records(pooled.records)


def test_sweep_cache_hits(exp2: models.Exponent, cache_file: str, mocker):
    grid = [5, 10, 20, 40, 80]

    first = services.sweep.Sweep(grid, exp2, result_cache=services.sweep.ResultCache(cache_file)).call()

    assert first.hits == 0

    spy = mocker.spy(services.discrete.DnBoundsReport, "call")
    second = services.sweep.Sweep(grid + [160], exp2, result_cache=services.sweep.ResultCache(cache_file)).call()

    assert second.hits == len(grid)
    assert spy.call_count == 1

    for cached, fresh in zip(second.records, first.records):
        assert abs(cached.dn_numeric - fresh.dn_numeric) <= 1e-12


def test_sweep_tol_is_part_of_key(exp2: models.Exponent, cache_file: str):
    services.sweep.Sweep([10], exp2, tol=1e-10, result_cache=services.sweep.ResultCache(cache_file)).call()
    struct = services.sweep.Sweep([10], exp2, tol=1e-9, result_cache=services.sweep.ResultCache(cache_file)).call()

    assert struct.hits == 0
