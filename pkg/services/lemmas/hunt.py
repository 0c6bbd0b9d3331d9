import concurrent.futures
import dataclasses
import time

import numpy as np

import context
import log
import models
from services.lemmas import check, diagnostic, predicates, sampling


@dataclasses.dataclass
class Summary:
    """
    Outcome of one counterexample hunt.

    min_margin is the smallest margin/scale over all samples, so lemmas of very different
    magnitudes compare on one axis. For the diagnostic lemma min_margin is the smallest
    normalized residual and calibrated the largest.
    """

    id: str
    strictness: str
    samples: int
    failures: int
    min_margin: float
    worst_sample: dict
    calibrated: float | None = None
    seconds: float = 0.0


@dataclasses.dataclass
class Struct:
    code: int
    summary: Summary | None
    errors: list[str]


def _sample_at(batch: dict[str, np.ndarray], j: int, p: float | None = None) -> dict:
    sample = {name: values[j].item() for name, values in batch.items()}

    if p is not None:
        sample["p"] = p

    return sample


def _merge(first: tuple, second: tuple) -> tuple:
    """(failures, min relative margin, worst sample) pairs merge associatively"""
    failures = first[0] + second[0]

    if second[1] < first[1]:
        return failures, second[1], second[2]

    return failures, first[1], first[2]


class Hunt:
    def __init__(self, id: str, samples: int = 100_000, seed: int = 42, threads: int = 1):
        self._id = id
        self._samples = samples
        self._seed = seed
        self._threads = threads

        self._logger = log.init("service")

    def call(self) -> Struct:
        struct = Struct(0, None, [])

        self._logger.info(f"{context.rid_get()} {__name__} {self._id} samples {self._samples} seed {self._seed}")

        t_start = time.monotonic()

        try:
            rng = np.random.default_rng(self._seed)

            if self._id == check.DIAGNOSTIC_ID:
                struct.summary = self._diagnostic(rng)
            elif self._id in predicates.LEMMAS:
                struct.summary = self._strict(rng)
            else:
                raise ValueError(f"unknown lemma id {self._id}")

            struct.summary.seconds = time.monotonic() - t_start

            if struct.summary.failures:
                struct.code = 422
                struct.errors.append(f"{self._id} fails on {struct.summary.failures} samples, worst {struct.summary.worst_sample}")
        except Exception as e:
            struct.code = 500
            struct.errors.append(str(e))
            self._logger.error(f"{context.rid_get()} {__name__} {self._id} exception {e}")

        self._logger.info(f"{context.rid_get()} {__name__} {self._id} code {struct.code} seconds {time.monotonic() - t_start:.3f}")

        return struct

    def _strict(self, rng: np.random.Generator) -> Summary:
        lemma = predicates.LEMMAS[self._id]

        if lemma.tabled:
            # one batch per p so that each series table is built once
            pool = sampling.p_pool(rng)
            batch = sampling.draw_series(self._id, rng, self._samples)
            which = rng.integers(0, pool.size, self._samples)
            jobs = [(float(p), {name: values[which == j] for name, values in batch.items()}) for j, p in enumerate(pool)]
        else:
            jobs = [(None, sampling.draw_continuous(self._id, rng, self._samples))]

        with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, self._threads)) as executor:
            results = list(executor.map(lambda job: self._evaluate(lemma, *job), jobs))

        failures, min_margin, worst = 0, np.inf, {}

        for result in results:
            failures, min_margin, worst = _merge((failures, min_margin, worst), result)

        return Summary(
            id=self._id,
            strictness=models.lemma_check.STRICT,
            samples=self._samples,
            failures=failures,
            min_margin=float(min_margin),
            worst_sample=worst,
        )

    def _evaluate(self, lemma: predicates.Lemma, p: float | None, batch: dict[str, np.ndarray]) -> tuple:
        if not batch or next(iter(batch.values())).size == 0:
            return 0, np.inf, {}

        args = [p if name == "p" and p is not None else batch[name] for name in lemma.variables]
        evaluation = lemma.evaluate(*args)

        relative = evaluation.margin / evaluation.scale
        worst = int(np.argmin(relative))

        return int(np.count_nonzero(~predicates.holds(evaluation))), float(relative[worst]), _sample_at(batch, worst, p)

    def _diagnostic(self, rng: np.random.Generator) -> Summary:
        pool = sampling.p_pool(rng)
        batch = sampling.draw_diagnostic(rng, self._samples, pool)

        values = np.empty(self._samples)
        keys = np.stack([batch["p"], batch["A"], batch["n"].astype(float)], axis=1)

        for key in np.unique(keys, axis=0):
            mask = np.all(keys == key, axis=1)
            values[mask] = diagnostic.residual(key[0], key[1], batch["i"][mask], int(key[2]))

        worst = int(np.argmax(values))

        self._logger.info(f"{context.rid_get()} {__name__} {self._id} calibrated {values[worst]:.6g}")

        return Summary(
            id=self._id,
            strictness=models.lemma_check.DIAGNOSTIC,
            samples=self._samples,
            failures=0,
            min_margin=float(values.min()),
            worst_sample=_sample_at(batch, worst),
            calibrated=float(values[worst]),
        )
