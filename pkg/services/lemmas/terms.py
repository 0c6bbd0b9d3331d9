import functools
import math

import numpy as np

import models
import services.core

# ranges shorter than this are summed directly instead of differencing suffix sums
DIRECT_SPAN = 1024


def poly(u: np.ndarray, q: float) -> np.ndarray:
    return u * u - 2.0 * q * u + 2.0 * q * q


def bracket(u: np.ndarray, q: float) -> np.ndarray:
    """k^(1/q)(ln^2 k - 2q ln k + 2q^2) - 2q^2, nonnegative since it equals I(k)/q"""
    return np.expm1(u / q) * poly(u, q) + u * (u - 2.0 * q)


def term_l2_6(k: np.ndarray, exp: models.Exponent) -> np.ndarray:
    return k ** (-1.0 - 1.0 / exp.q) * (1.0 - 1.0 / (exp.p * k ** (1.0 / exp.q))) ** exp.r


def term_l2_7(k: np.ndarray, exp: models.Exponent) -> np.ndarray:
    return poly(np.log(k), exp.q) * k ** (-1.0 - 1.0 / exp.q)


def term_l2_8(k: np.ndarray, exp: models.Exponent) -> np.ndarray:
    return poly(np.log(k), exp.q) * k ** (-1.0 - 2.0 / exp.q)


def term_l2_9(k: np.ndarray, exp: models.Exponent) -> np.ndarray:
    """k^(-p) [k^((r-1)/q) - (k^(1/q) - 1/p)^(r-1)] (k^(1/q) P - 2q^2), r = p/q"""
    p, q, r = exp.p, exp.q, exp.r
    u = np.log(k)
    gap = -np.expm1((r - 1.0) * np.log1p(-1.0 / (p * np.exp(u / q))))

    return np.exp((-p + (r - 1.0) / q) * u) * gap * bracket(u, q)


def term_l2_11(k: np.ndarray, exp: models.Exponent) -> np.ndarray:
    return k ** (-1.0 - 2.0 / exp.q)


def term_l2_12(k: np.ndarray, exp: models.Exponent) -> np.ndarray:
    """k^(-p) (k^(1/q) - 1/p)^(r-1) (k^(1/q) P - 2q^2)"""
    p, q, r = exp.p, exp.q, exp.r
    u = np.log(k)

    return np.exp((-p + (r - 1.0) / q) * u) * (1.0 - 1.0 / (p * np.exp(u / q))) ** (r - 1.0) * bracket(u, q)


TERMS = {
    "l2_6": term_l2_6,
    "l2_7": term_l2_7,
    "l2_8": term_l2_8,
    "l2_9": term_l2_9,
    "l2_11": term_l2_11,
    "l2_12": term_l2_12,
}


class SumTable:
    """terms t_1..t_N of one series and their compensated suffix sums"""

    def __init__(self, terms: np.ndarray):
        self._terms = terms
        self._suffix = np.append(services.core.compensated_suffix_sum(terms), 0.0)

    @property
    def size(self) -> int:
        return int(self._terms.size)

    def range_sum(self, i: np.ndarray, n: np.ndarray) -> np.ndarray:
        """sum_{k=i}^{n} t_k per pair, zero for empty ranges"""
        i = np.asarray(i, dtype=np.int64)
        n = np.asarray(n, dtype=np.int64)

        if np.any(n > self.size):
            raise ValueError(f"range end beyond table size {self.size}")

        out = self._suffix[np.clip(i - 1, 0, self.size)] - self._suffix[np.clip(n, 0, self.size)]
        out = np.where(n < i, 0.0, out)

        for j in np.flatnonzero((n >= i) & (n - i < DIRECT_SPAN)):
            out[j] = math.fsum(self._terms[i[j] - 1 : n[j]].tolist())

        return out


def table_size(n_max: int) -> int:
    return 1 << max(10, math.ceil(math.log2(max(n_max, 1))))


@functools.lru_cache(maxsize=8)
def table(name: str, p: float, size: int) -> SumTable:
    exp = models.Exponent.from_p(p)
    k = np.arange(1, size + 1, dtype=float)

    return SumTable(TERMS[name](k, exp))


def range_sum(name: str, exp: models.Exponent, i: np.ndarray, n: np.ndarray) -> np.ndarray:
    n = np.asarray(n, dtype=np.int64)

    return table(name, exp.p, table_size(int(n.max(initial=1)))).range_sum(i, n)
