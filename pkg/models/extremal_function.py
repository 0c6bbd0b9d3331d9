import dataclasses
import typing

import numpy as np

import models.alpha_root
import models.exponent

KIND_FSTAR: typing.Final = "fstar"
KIND_F_AB_P2: typing.Final = "f_ab_p2"
KIND_WEIGHT_G: typing.Final = "weight_g"
KIND_POWER: typing.Final = "power"

KINDS = [KIND_FSTAR, KIND_F_AB_P2, KIND_WEIGHT_G, KIND_POWER]


@dataclasses.dataclass(frozen=True)
class ExtremalFunction:
    """
    Witness function on [1, b] evaluated in the log domain u = ln x.

    fstar, f_ab_p2: x^(-1/p) (alpha q cos(alpha u) + sin(alpha u))
    weight_g: x^(-1/(pq)) cos(alpha u)^(1/q)
    power: x^(-1/p)
    """

    alpha: models.alpha_root.AlphaRoot | None
    exp: models.exponent.Exponent
    kind: str

    @property
    def frequency(self) -> float:
        return self.alpha.alpha if self.alpha else 0.0

    def shape(self, u: np.ndarray) -> np.ndarray:
        """f(e^u) with the leading power of x removed"""
        a = self.frequency

        if self.kind in (KIND_FSTAR, KIND_F_AB_P2):
            return a * self.exp.q * np.cos(a * u) + np.sin(a * u)
        if self.kind == KIND_WEIGHT_G:
            return np.cos(a * u) ** (1.0 / self.exp.q)

        return np.ones_like(u)

    def leading_power(self) -> float:
        if self.kind == KIND_WEIGHT_G:
            return -1.0 / (self.exp.p * self.exp.q)

        return -1.0 / self.exp.p

    def value(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        return np.exp(self.leading_power() * u) * self.shape(u)

    def has_closed_prefix(self) -> bool:
        return self.kind != KIND_WEIGHT_G

    def scaled_prefix(self, u: np.ndarray) -> np.ndarray:
        """e^(-u/q) times the integral of f from 1 to e^u, finite for every L"""
        u = np.asarray(u, dtype=float)
        q = self.exp.q

        if self.kind in (KIND_FSTAR, KIND_F_AB_P2):
            return q * np.sin(self.frequency * u)
        if self.kind == KIND_POWER:
            return -q * np.expm1(-u / q)

        raise NotImplementedError(f"{self.kind} has no closed prefix")

    def prefix(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)

        return np.exp(u / self.exp.q) * self.scaled_prefix(u)

    def describe(self) -> str:
        if self.alpha is None:
            return f"{self.kind}(p={self.exp.p:.17g})"

        return f"{self.kind}(p={self.exp.p:.17g}, alpha={self.frequency:.17g}, L={self.alpha.L:.17g})"

