import dataclasses
import math
import typing

import numpy as np

import models
import services.continuous.upper_certificate
import services.core
import services.errors
import services.roots
from services.lemmas import terms


@dataclasses.dataclass
class Evaluation:
    """
    Vectorized outcome of one auxiliary inequality.

    margin >= 0 means the inequality holds, scale is the magnitude of the largest
    quantity entering the comparison and sets the rounding tolerance.
    """

    lhs: np.ndarray
    rhs: np.ndarray
    margin: np.ndarray
    scale: np.ndarray


def _evaluation(lhs, rhs, margin, *components) -> Evaluation:
    scale = np.abs(lhs) + np.abs(rhs)

    for component in components:
        scale = scale + np.abs(component)

    return Evaluation(lhs=lhs, rhs=rhs, margin=margin, scale=np.maximum(scale, np.finfo(float).tiny))


def _require(ok: np.ndarray, message: str):
    if not np.all(ok):
        raise services.errors.LemmaDomainError(message)


def _integers(*values: np.ndarray):
    for value in values:
        _require(value == np.floor(value), "summation bounds must be integers")


def _exp(p: float) -> models.Exponent:
    return models.Exponent.from_p(float(p))


def l2_1(x: np.ndarray, alpha: np.ndarray) -> Evaluation:
    """(1 - x)^alpha <= 1 - alpha x + (alpha x)^2 / 2 on 0 <= x <= 1, alpha >= 0"""
    _require((x >= 0.0) & (x <= 1.0), "x must lie in [0, 1]")
    _require(alpha >= 0.0, "alpha must be nonnegative")

    ax = alpha * x
    lhs = (1.0 - x) ** alpha
    rhs = 1.0 - ax + 0.5 * ax * ax

    return _evaluation(lhs, rhs, rhs - lhs, 1.0, ax)


def l2_2(x: np.ndarray, alpha: np.ndarray) -> Evaluation:
    """(1 + x)^alpha <= 1 + alpha x on x >= -1, 0 <= alpha <= 1"""
    _require(x >= -1.0, "x must be at least -1")
    _require((alpha >= 0.0) & (alpha <= 1.0), "alpha must lie in [0, 1]")

    lhs = (1.0 + x) ** alpha
    rhs = 1.0 + alpha * x

    return _evaluation(lhs, rhs, rhs - lhs, 1.0, alpha * x)


def l2_3(x: np.ndarray, alpha: np.ndarray) -> Evaluation:
    """(1 + x)^alpha <= 1 + alpha x + (alpha x)^2 on x >= 0, alpha >= 0, alpha x < 1"""
    _require(x >= 0.0, "x must be nonnegative")
    _require(alpha >= 0.0, "alpha must be nonnegative")
    _require(alpha * x < 1.0, "alpha x must be below 1")

    ax = alpha * x
    lhs = (1.0 + x) ** alpha
    rhs = 1.0 + ax + ax * ax

    return _evaluation(lhs, rhs, rhs - lhs, 1.0)


def l2_4(p: np.ndarray, L: np.ndarray, u: np.ndarray) -> Evaluation:
    """
    Pointwise inequality behind the upper certificate, alpha = arctan(1/p)/L:
    ((cos + alpha q sin)/(1 + alpha^2 q^2))^(p/q) <= cos^(p/q - 1) (cos + alpha p sin)/(1 + c alpha^2)
    at alpha u, with c = min(q^2, (pq - 1)/2).
    """
    _require(p >= 2.0, "p must be at least 2")
    _require(L > 0.0, "L must be positive")
    _require((u >= 0.0) & (u <= L), "u must lie in [0, L]")

    q = p / (p - 1.0)
    r = p / q
    alpha = np.arctan(1.0 / p) / L
    c = np.minimum(q * q, 0.5 * (p * q - 1.0))
    cos, sin = np.cos(alpha * u), np.sin(alpha * u)

    lhs = ((cos + alpha * q * sin) / (1.0 + (alpha * q) ** 2)) ** r
    rhs = cos ** (r - 1.0) * (cos + alpha * p * sin) / (1.0 + c * alpha * alpha)

    return _evaluation(lhs, rhs, rhs - lhs)


def l2_5(p: np.ndarray, eps: np.ndarray, L: np.ndarray, u: np.ndarray) -> Evaluation:
    """
    Pointwise inequality behind the lower certificate, alpha the extremal frequency for L:
    sin^(p/q) >= h^(p/q - 1) ((1 + alpha^2 pq) sin - alpha (p - q) cos)/(1 + (pq + eps) alpha^2)
    at alpha u, with h = alpha q cos + sin, once L exceeds ln b0(eps).
    """
    _require(p >= 2.0, "p must be at least 2")
    _require((eps > 0.0) & (eps <= 1.0), "eps must lie in (0, 1]")
    _require((u >= 0.0) & (u <= L), "u must lie in [0, L]")

    threshold = np.array([services.core.threshold_log(float(pi), float(ei)) for pi, ei in zip(np.atleast_1d(p), np.atleast_1d(eps))])
    _require(L > threshold, "L must exceed ln b0(eps)")

    q = p / (p - 1.0)
    r = p / q
    alpha = services.roots.solve_alpha_extremal_array(L, q)
    cos, sin = np.cos(alpha * u), np.maximum(np.sin(alpha * u), 0.0)
    h = np.maximum(alpha * q * cos + sin, 0.0)

    lhs = sin**r
    numerator = (1.0 + alpha * alpha * p * q) * sin - alpha * (p - q) * cos
    rhs = h ** (r - 1.0) * numerator / (1.0 + (p * q + eps) * alpha * alpha)

    return _evaluation(lhs, rhs, lhs - rhs)


def _log_weight_parts(i: np.ndarray, q: float):
    li = np.log(i)

    return li, li * li + 2.0 * q * q, li * li - q * li + 1.5 * q * q


def l2_6(p: float, i: np.ndarray, n: np.ndarray) -> Evaluation:
    """sum_{k=i}^n k^(-1-1/q) (1 - 1/(p k^(1/q)))^(p/q) <= q (i^(-1/q) - (n + 1)^(-1/q))"""
    _range_domain(i, n, 1)
    exp = _exp(p)
    q = exp.q

    lhs = terms.range_sum("l2_6", exp, i, n)
    rhs = q * i ** (-1.0 / q) * -np.expm1(-np.log1p((n + 1.0 - i) / i) / q)

    return _evaluation(lhs, rhs, rhs - lhs)


def l2_7(p: float, i: np.ndarray, n: np.ndarray) -> Evaluation:
    """sum_{k=i}^n P(ln k)/k^(1+1/q) > q(ln^2 i + 2q^2)/i^(1/q) + P(ln i)/(2 i^(1+1/q)) - q(ln^2 n + 2q^2)/n^(1/q)"""
    _range_domain(i, n, 1)
    exp = _exp(p)
    q = exp.q

    li, wi, _ = _log_weight_parts(i, q)
    _, wn, _ = _log_weight_parts(n, q)

    head = q * wi * i ** (-1.0 / q)
    half = 0.5 * terms.poly(li, q) * i ** (-1.0 - 1.0 / q)
    tail = q * wn * n ** (-1.0 / q)

    lhs = terms.range_sum("l2_7", exp, i, n)
    rhs = head + half - tail

    return _evaluation(lhs, rhs, lhs - rhs, head, half, tail)


def l2_8(p: float, i: np.ndarray, n: np.ndarray) -> Evaluation:
    """sum_{k=i}^n P(ln k)/k^(1+2/q) < P(ln i)/i^(1+2/q) + q(ln^2 i - q ln i + 3q^2/2)/(2 i^(2/q))"""
    _range_domain(i, n, 1)
    exp = _exp(p)
    q = exp.q

    li, _, vi = _log_weight_parts(i, q)

    first = terms.poly(li, q) * i ** (-1.0 - 2.0 / q)
    integral = 0.5 * q * vi * i ** (-2.0 / q)

    lhs = terms.range_sum("l2_8", exp, i, n)
    rhs = first + integral

    return _evaluation(lhs, rhs, rhs - lhs)


def l2_9(p: float, i: np.ndarray, n: np.ndarray) -> Evaluation:
    """
    sum_{k=i}^n k^(-p) [k^((r-1)/q) - (k^(1/q) - 1/p)^(r-1)] (k^(1/q) P - 2q^2)
      < P(ln i)/(q i^(1+2/q)) + (ln^2 i - q ln i + 3q^2/2)/(2 i^(2/q)) - 2q^2/(3 i^(3/q)) + 2q^2/(3 n^(3/q))
    """
    _range_domain(i, n, 1)
    exp = _exp(p)
    q = exp.q

    li, _, vi = _log_weight_parts(i, q)

    parts = [
        terms.poly(li, q) * i ** (-1.0 - 2.0 / q) / q,
        0.5 * vi * i ** (-2.0 / q),
        -2.0 * q * q / 3.0 * i ** (-3.0 / q),
        2.0 * q * q / 3.0 * n ** (-3.0 / q),
    ]

    lhs = terms.range_sum("l2_9", exp, i, n)
    rhs = parts[0] + parts[1] + parts[2] + parts[3]

    return _evaluation(lhs, rhs, rhs - lhs, *parts)


def l2_10(p: float, i: np.ndarray) -> Evaluation:
    """2q^2 - 3/4 + 2q/(3 i^(2/q)) - 2q/i^(1+1/q) - q^2/i^(1/q) - (ln^2 i - q ln i + 3q^2/2)/(2q i^(1/q)) > 0 for i >= 2"""
    _integers(i)
    _require(i >= 2, "i must be at least 2")
    exp = _exp(p)
    q = exp.q

    _, _, vi = _log_weight_parts(i, q)

    parts = [
        2.0 * q * q - 0.75,
        2.0 * q / 3.0 * i ** (-2.0 / q),
        -2.0 * q * i ** (-1.0 - 1.0 / q),
        -q * q * i ** (-1.0 / q),
        -vi / (2.0 * q) * i ** (-1.0 / q),
    ]

    value = sum(parts)

    return _evaluation(value, np.zeros_like(value), value, *parts)


def _log2_head(q: float) -> tuple[float, float, float]:
    l2 = math.log(2.0)

    return l2, l2 * l2 + 2.0 * q * q, l2 * l2 - q * l2 + 1.5 * q * q


def l2_11(p: float, n: np.ndarray) -> Evaluation:
    """(ln^2 2 + 2q^2)/2^(1/q) + 2q/(3 2^(3/q)) - ln^2 2 - 2q sum_{k=2}^n k^(-1-2/q) - (ln^2 2 - q ln 2 + 3q^2/2)/(q 2^(1+2/q)) > 0"""
    _integers(n)
    _require(n >= 1, "n must be at least 1")
    exp = _exp(p)
    q = exp.q

    l2, w2, v2 = _log2_head(q)
    tail = -2.0 * q * terms.range_sum("l2_11", exp, np.full_like(n, 2), n)

    fixed = [
        w2 * 2.0 ** (-1.0 / q),
        2.0 * q / 3.0 * 2.0 ** (-3.0 / q),
        -l2 * l2,
        -v2 / q * 2.0 ** (-1.0 - 2.0 / q),
    ]

    value = sum(fixed) + tail

    return _evaluation(value, np.zeros_like(value), value, tail, *fixed)


def _l2_12_rhs(exp: models.Exponent, i: np.ndarray, n: np.ndarray) -> list[np.ndarray]:
    q = exp.q

    _, wi, vi = _log_weight_parts(i, q)
    _, wn, _ = _log_weight_parts(n, q)

    return [
        q * wi * i ** (-1.0 / q),
        -q * wn * n ** (-1.0 / q),
        -2.0 * q * q * terms.range_sum("l2_11", exp, i, n),
        -0.5 * vi * i ** (-2.0 / q),
        2.0 * q * q / 3.0 * i ** (-3.0 / q),
        -2.0 * q * q / 3.0 * n ** (-3.0 / q),
    ]


def l2_12(p: float, i: np.ndarray, n: np.ndarray) -> Evaluation:
    """
    sum_{k=i}^n k^(-p) (k^(1/q) - 1/p)^(r-1) (k^(1/q) P - 2q^2)
      > q(ln^2 i + 2q^2)/i^(1/q) - q(ln^2 n + 2q^2)/n^(1/q) - 2q^2 sum_{k=i}^n k^(-1-2/q)
        - (ln^2 i - q ln i + 3q^2/2)/(2 i^(2/q)) + 2q^2/(3 i^(3/q)) - 2q^2/(3 n^(3/q)), 2 <= i <= n
    """
    _range_domain(i, n, 2)
    exp = _exp(p)

    parts = _l2_12_rhs(exp, i, n)
    lhs = terms.range_sum("l2_12", exp, i, n)
    rhs = sum(parts)

    return _evaluation(lhs, rhs, lhs - rhs, *parts)


def _l2_13_rhs(exp: models.Exponent, n: np.ndarray) -> list[np.ndarray]:
    q = exp.q

    l2, w2, v2 = _log2_head(q)
    _, wn, _ = _log_weight_parts(n, q)

    return [
        q * w2 * 2.0 ** (-1.0 / q) + np.zeros_like(wn),
        -q * wn * n ** (-1.0 / q),
        -2.0 * q * q * terms.range_sum("l2_11", exp, np.full_like(n, 2), n),
        -v2 * 2.0 ** (-1.0 - 2.0 / q) + np.zeros_like(wn),
        2.0 / 3.0 * q * q * 2.0 ** (-3.0 / q) + np.zeros_like(wn),
        -2.0 * q * q / 3.0 * n ** (-3.0 / q),
    ]


def _l2_13_like(p: float, n: np.ndarray, start: int) -> Evaluation:
    _integers(n)
    _require(n >= 1, "n must be at least 1")
    exp = _exp(p)

    parts = _l2_13_rhs(exp, n)
    lhs = terms.range_sum("l2_12", exp, np.full_like(n, start), n)
    rhs = sum(parts)

    return _evaluation(lhs, rhs, lhs - rhs, *parts)


def l2_13(p: float, n: np.ndarray) -> Evaluation:
    """the l2_12 sum taken from k = 1 exceeds its closed lower bound with the i = 2 head, n >= 1"""
    return _l2_13_like(p, n, 1)


def l2_14(p: float, n: np.ndarray) -> Evaluation:
    """same bound for the sum from k = 2, the k = 1 term being zero"""
    return _l2_13_like(p, n, 2)


def _range_domain(i: np.ndarray, n: np.ndarray, lowest: int):
    _integers(i, n)
    _require(i >= lowest, f"i must be at least {lowest}")
    _require(n >= i, "n must be at least i")


class Lemma(typing.NamedTuple):
    id: str
    variables: tuple[str, ...]
    evaluate: typing.Callable[..., Evaluation]
    # true when p is a scalar shared by the whole batch (series tables are per p)
    tabled: bool


LEMMAS: dict[str, Lemma] = {
    "L2_1": Lemma("L2_1", ("x", "alpha"), l2_1, False),
    "L2_2": Lemma("L2_2", ("x", "alpha"), l2_2, False),
    "L2_3": Lemma("L2_3", ("x", "alpha"), l2_3, False),
    "L2_4": Lemma("L2_4", ("p", "L", "u"), l2_4, False),
    "L2_5": Lemma("L2_5", ("p", "eps", "L", "u"), l2_5, False),
    "L2_6": Lemma("L2_6", ("p", "i", "n"), l2_6, True),
    "L2_7": Lemma("L2_7", ("p", "i", "n"), l2_7, True),
    "L2_8": Lemma("L2_8", ("p", "i", "n"), l2_8, True),
    "L2_9": Lemma("L2_9", ("p", "i", "n"), l2_9, True),
    "L2_10": Lemma("L2_10", ("p", "i"), l2_10, True),
    "L2_11": Lemma("L2_11", ("p", "n"), l2_11, True),
    "L2_12": Lemma("L2_12", ("p", "i", "n"), l2_12, True),
    "L2_13": Lemma("L2_13", ("p", "n"), l2_13, True),
    "L2_14": Lemma("L2_14", ("p", "n"), l2_14, True),
}

# relative rounding slack granted to every margin
TOLERANCE = 1e-12


def holds(evaluation: Evaluation) -> np.ndarray:
    return evaluation.margin >= -TOLERANCE * evaluation.scale
