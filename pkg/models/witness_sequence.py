import dataclasses
import typing

import numpy as np

import services.errors

PROVENANCE_ASTAR: typing.Final = "astar"
PROVENANCE_MU_WEIGHT: typing.Final = "mu_weight"
PROVENANCE_DEFAULT_WEIGHT: typing.Final = "default_weight"
PROVENANCE_CUSTOM: typing.Final = "custom"
PROVENANCE_POWER_METHOD: typing.Final = "power_method_output"


@dataclasses.dataclass(frozen=True)
class WitnessSequence:
    """strictly positive finite sequence a_1..a_n"""

    values: np.ndarray
    provenance: str
    params: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        values = np.array(self.values, dtype=float)

        if values.ndim != 1 or values.size == 0:
            raise services.errors.DomainError("witness must be a nonempty 1-d sequence")
        if not np.all(values > 0.0):
            raise services.errors.WitnessInvalidError(f"{self.provenance} witness has nonpositive entries")

        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @classmethod
    def custom(cls, values: typing.Sequence[float]) -> "WitnessSequence":
        return cls(values=np.asarray(values, dtype=float), provenance=PROVENANCE_CUSTOM)
