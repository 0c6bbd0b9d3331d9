import models
import services.sweep


def _record(n: int, dn: float = 3.25) -> models.SweepRecord:
    return models.SweepRecord(n=n, p=2.0, alpha=0.123, dn_numeric=dn, lower_cert=dn - 0.1, upper_cert=dn + 0.1, qp=4.0, sandwich_lo_pass=True, iterations=20, residual=1e-12, seconds=0.5)


def test_cache_roundtrip(cache_file: str):
    cache = services.sweep.ResultCache(cache_file)

    assert len(cache) == 0
    assert cache.get(10, 2.0, 1e-10) is None

    cache.append(_record(10, 1.0 / 3.0), 1e-10)
    cache.append(_record(20), 1e-10)

    with open(cache_file) as file:
        lines = file.read().split("\n")

    assert lines[0] == f"# hardy-sharp algorithm={services.sweep.ALGORITHM_VERSION}"
    assert lines[1].startswith("n,p,tol,version,")

    reloaded = services.sweep.ResultCache(cache_file)
    record = reloaded.get(10, 2.0, 1e-10)

    assert len(reloaded) == 2
    assert record.dn_numeric == 1.0 / 3.0
    assert record.sandwich_lo_pass is True
    assert record.sandwich_hi_pass is None
    assert record.seconds is None


def test_cache_key_mismatch(cache_file: str):
    cache = services.sweep.ResultCache(cache_file)
    cache.append(_record(10), 1e-10)

    reloaded = services.sweep.ResultCache(cache_file)

    assert reloaded.get(10, 2.0, 1e-9) is None
    assert reloaded.get(10, 3.0, 1e-10) is None
    assert reloaded.get(11, 2.0, 1e-10) is None


def test_cache_append_once(cache_file: str):
    cache = services.sweep.ResultCache(cache_file)
    cache.append(_record(10), 1e-10)
    cache.append(_record(10), 1e-10)

    with open(cache_file) as file:
        assert len(file.read().strip().split("\n")) == 3


def test_cache_path_env(cache_file: str):
    assert services.sweep.cache_path("/tmp/other.csv") == cache_file
