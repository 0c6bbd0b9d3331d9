import concurrent.futures
import dataclasses
import math
import time

import context
import log
import models
import services.discrete
from services.sweep import cache


@dataclasses.dataclass
class Struct:
    code: int
    records: list[models.SweepRecord]
    hits: int
    errors: list[str]


def geometric_grid(n_min: int, n_max: int, points: int) -> list[int]:
    if not (1 <= n_min < n_max and points >= 2):
        raise ValueError(f"invalid geometric grid {n_min} {n_max} {points}")

    step = math.log(n_max / n_min) / (points - 1)

    return sorted({round(n_min * math.exp(step * j)) for j in range(points)})


class Sweep:
    """
    d_n bounds over an n grid at one p.

    Points are computed on a thread pool and returned in grid order, cached rows are
    reused and new rows appended to the cache from the calling thread only.
    """

    def __init__(
        self,
        n_grid: list[int],
        exp: models.Exponent,
        tol: float = 1e-10,
        max_iter: int = 10_000,
        A_grid: list[float] | None = None,
        seed: int = 0,
        threads: int = 1,
        timing: bool = False,
        result_cache: cache.ResultCache | None = None,
    ):
        self._n_grid = n_grid
        self._exp = exp
        self._tol = tol
        self._max_iter = max_iter
        self._A_grid = A_grid
        self._seed = seed
        self._threads = threads
        self._timing = timing
        self._cache = result_cache

        self._logger = log.init("service")

    def call(self) -> Struct:
        struct = Struct(0, [], 0, [])

        self._logger.info(f"{context.rid_get()} {__name__} p {self._exp.p} points {len(self._n_grid)} threads {self._threads}")

        t_start = time.monotonic()

        records: dict[int, models.SweepRecord] = {}

        if self._cache is not None:
            for n in self._n_grid:
                if (record := self._cache.get(n, self._exp.p, self._tol)) is not None:
                    records[n] = record

        struct.hits = len(records)
        missing = [n for n in self._n_grid if n not in records]

        for n, struct_point in zip(missing, self._map(missing)):
            if struct_point.code == 500 or struct_point.record is None:
                struct.code = 500
                struct.errors.extend(struct_point.errors)
                continue

            if struct_point.code != 0:
                struct.errors.extend(struct_point.errors)

            records[n] = struct_point.record

            if self._cache is not None:
                self._cache.append(struct_point.record, self._tol)

        struct.records = [records[n] for n in self._n_grid if n in records]

        self._logger.info(f"{context.rid_get()} {__name__} p {self._exp.p} hits {struct.hits} computed {len(missing)} seconds {time.monotonic() - t_start:.3f}")

        return struct

    def _point(self, n: int):
        return services.discrete.DnBoundsReport(
            n=n,
            exp=self._exp,
            tol=self._tol,
            max_iter=self._max_iter,
            A_grid=self._A_grid,
            seed=self._seed,
            timing=self._timing,
        ).call()

    def _map(self, grid: list[int]) -> list:
        if self._threads <= 1:
            return [self._point(n) for n in grid]

        with concurrent.futures.ThreadPoolExecutor(max_workers=self._threads) as executor:
            return list(executor.map(self._point, grid))
