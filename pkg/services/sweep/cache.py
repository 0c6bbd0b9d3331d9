import os
import threading

import polars

import context
import log
import models
from services.sweep import emit

# bump when a change to the solvers alters computed values
ALGORITHM_VERSION = "1"

HEADER = f"# hardy-sharp algorithm={ALGORITHM_VERSION}"

KEY_COLUMNS = ["n", "p", "tol", "version"]
VALUE_COLUMNS = ["alpha", "dn_numeric", "lower_cert", "upper_cert", "qp", "sandwich_lo_pass", "sandwich_hi_pass", "iterations", "residual", "converged", "budget"]
COLUMNS = KEY_COLUMNS + VALUE_COLUMNS

ENV_PATH = "HARDY_SHARP_CACHE"

logger = log.init("service")


def cache_path(path: str | None) -> str | None:
    return os.environ.get(ENV_PATH) or path


def _key(n: int, p: float, tol: float, version: str = ALGORITHM_VERSION) -> tuple[str, str, str, str]:
    return (str(n), emit.format_value(float(p)), emit.format_value(float(tol)), version)


def _parse_bool(value: str | None) -> bool | None:
    if not value:
        return None

    return value == "true"


class ResultCache:
    """
    Append-only csv of computed d_n rows.

    A row is reused only when n, p, tol and algorithm version all match. Rows stay in the
    order they were computed and the file has a single writer.
    """

    def __init__(self, path: str):
        self._path = path
        self._rows: dict[tuple, models.SweepRecord] = {}
        self._lock = threading.Lock()

        if os.path.exists(path):
            self._load()

    @property
    def path(self) -> str:
        return self._path

    def __len__(self) -> int:
        return len(self._rows)

    def _load(self):
        frame = polars.read_csv(self._path, comment_prefix="#", infer_schema=False)

        for row in frame.iter_rows(named=True):
            key = (row["n"], row["p"], row["tol"], row["version"])
            self._rows[key] = models.SweepRecord(
                n=int(row["n"]),
                p=float(row["p"]),
                alpha=float(row["alpha"]),
                dn_numeric=float(row["dn_numeric"]),
                lower_cert=float(row["lower_cert"]),
                upper_cert=float(row["upper_cert"]),
                qp=float(row["qp"]),
                sandwich_lo_pass=_parse_bool(row["sandwich_lo_pass"]),
                sandwich_hi_pass=_parse_bool(row["sandwich_hi_pass"]),
                iterations=int(row["iterations"]),
                residual=float(row["residual"]),
                converged=row["converged"] == "true",
                budget=float(row["budget"]),
            )

        logger.info(f"{context.rid_get()} {__name__} loaded {len(self._rows)} rows from {self._path}")

    def get(self, n: int, p: float, tol: float) -> models.SweepRecord | None:
        return self._rows.get(_key(n, p, tol))

    def append(self, record: models.SweepRecord, tol: float):
        key = _key(record.n, record.p, tol)

        with self._lock:
            if key in self._rows:
                return

            fresh = not os.path.exists(self._path) or os.path.getsize(self._path) == 0
            values = record.model_dump()

            with open(self._path, "a", encoding="utf-8", newline="\n") as file:
                if fresh:
                    file.write(f"{HEADER}\n{','.join(COLUMNS)}\n")
                file.write(",".join(list(key) + [emit.format_value(values[column]) for column in VALUE_COLUMNS]) + "\n")

            self._rows[key] = record.model_copy(update={"seconds": None})
