import math
import os
import typing

import pydantic
import toml  # type: ignore

LEMMA_IDS = [f"L2_{i}" for i in range(1, 16)]

COMMANDS = ["alpha", "continuous", "discrete", "rate", "lemmas"]


class RunConfig(pydantic.BaseModel):
    """validated parameters of one cli invocation, unknown keys are rejected"""

    model_config = pydantic.ConfigDict(extra="forbid", frozen=True)

    command: typing.Literal["alpha", "continuous", "discrete", "rate", "lemmas"]
    p: float = 2.0
    n: int | None = None
    a: float | None = None
    b: float | None = None
    L: float | None = None
    tol: float | None = None
    max_iter: int = 10_000
    A_grid: list[float] = [4.0, 8.0, 16.0, 32.0, 64.0]
    n_grid: list[int] = []
    model: typing.Literal["c_over_log2", "two_term"] = "two_term"
    ids: list[str] = LEMMA_IDS
    samples: int = 100_000
    seed: int = 42
    threads: int = pydantic.Field(default_factory=lambda: os.cpu_count() or 1)
    output_format: typing.Literal["csv", "json"] = "csv"
    output_path: str | None = None
    cache_path: str | None = None
    timing: bool = False

    @pydantic.field_validator("p")
    @classmethod
    def _p_valid(cls, p: float) -> float:
        if not (p > 1.0 and math.isfinite(p)):
            raise ValueError("p must be greater than 1")
        return p

    @pydantic.field_validator("threads", "samples", "max_iter")
    @classmethod
    def _positive_count(cls, value: int) -> int:
        if value < 1:
            raise ValueError("counts must be at least 1")
        return value

    @pydantic.model_validator(mode="after")
    def _command_valid(self) -> "RunConfig":
        if self.command in ("alpha", "continuous"):
            self._validate_interval()
            if self.tol is not None and not (1e-12 <= self.tol <= 1e-4):
                raise ValueError("tol must lie in [1e-12, 1e-4]")
        elif self.command == "discrete":
            if self.n is None or self.n < 1:
                raise ValueError("n must be at least 1")
            self._validate_discrete_tol()
        elif self.command == "rate":
            if len(self.n_grid) < 5:
                raise ValueError("rate fit needs at least 5 grid points")
            if any(n < 1 for n in self.n_grid) or sorted(set(self.n_grid)) != self.n_grid:
                raise ValueError("n_grid must be strictly increasing positive integers")
            self._validate_discrete_tol()
        elif self.command == "lemmas":
            unknown = [id for id in self.ids if id not in LEMMA_IDS]
            if unknown:
                raise ValueError(f"unknown lemma ids {','.join(unknown)}")

        if any(A <= 2.0 for A in self.A_grid):
            raise ValueError("A_grid values must exceed 2")

        return self

    def _validate_interval(self):
        if self.L is not None:
            if not self.L > 0.0:
                raise ValueError("L must be positive")
            return

        if self.a is None or self.b is None:
            raise ValueError("either L or both a and b are required")
        if not (0.0 < self.a < self.b):
            raise ValueError("interval requires 0 < a < b")

    def _validate_discrete_tol(self):
        if self.tol is not None and not (1e-13 <= self.tol <= 1e-6):
            raise ValueError("tol must lie in [1e-13, 1e-6]")

    def continuous_tol(self) -> float:
        return self.tol if self.tol is not None else 1e-9

    def discrete_tol(self) -> float:
        return self.tol if self.tol is not None else 1e-10

    @classmethod
    def from_toml(cls, toml_file: str, command: str, overrides: dict) -> "RunConfig":
        """
        Load the [command] table of a toml file, cli values win over file values.
        """
        toml_dict = toml.load(toml_file)
        params = dict(toml_dict.get(command, {}))
        params.update({key: value for key, value in overrides.items() if value is not None})

        return cls(command=command, **params)
