import dataclasses
import math
import typing

import numpy as np

import services.core
import services.quadrature


@dataclasses.dataclass
class Tails:
    """T(u_j) = int_{u_j}^{L} e^{-(u - u_j)/q} kernel(u) du on a grid, with error bounds"""

    grid: np.ndarray
    values: np.ndarray
    errors: np.ndarray
    evaluations: int


def tail_integrals(
    kernel: typing.Callable[[float], float],
    grid: np.ndarray,
    L: float,
    q: float,
    tol: float,
) -> Tails:
    """
    Panel integrals by adaptive Simpson, then the backward recurrence
    T_j = P_j + e^{-(u_{j+1} - u_j)/q} T_{j+1}.

    Each panel gets the share tol * width / L of the tolerance.
    """
    edges = np.append(grid, L) if grid[-1] < L else grid
    panels = np.empty(edges.size - 1)
    panel_errors = np.empty(edges.size - 1)
    evaluations = 0

    for j in range(edges.size - 1):
        left, right = float(edges[j]), float(edges[j + 1])
        quad = services.quadrature.adaptive_simpson(
            lambda u, left=left: math.exp(-(u - left) / q) * kernel(u),
            left,
            right,
            max(tol * (right - left) / L, 1e-300),
            min_panels=1,
        )
        panels[j] = quad.value
        panel_errors[j] = quad.error
        evaluations += quad.evaluations

    values = np.empty(edges.size)
    values[-1] = 0.0
    decay = np.exp(-np.diff(edges) / q)

    for j in range(edges.size - 2, -1, -1):
        values[j] = panels[j] + decay[j] * values[j + 1]

    errors = np.append(services.core.compensated_suffix_sum(panel_errors), 0.0)

    return Tails(grid=edges, values=values, errors=errors, evaluations=evaluations)


def tail_at(
    kernel: typing.Callable[[float], float],
    tails: Tails,
    s: float,
    q: float,
    tol: float,
) -> tuple[float, float]:
    """T(s) for s between grid nodes, from the next node's tail"""
    j = int(np.searchsorted(tails.grid, s, side="right"))
    j = min(max(j, 1), tails.grid.size - 1)
    right = float(tails.grid[j])

    if s >= right:
        return float(tails.values[j]), float(tails.errors[j])

    quad = services.quadrature.adaptive_simpson(lambda u: math.exp(-(u - s) / q) * kernel(u), s, right, tol, min_panels=1)

    return quad.value + math.exp(-(right - s) / q) * float(tails.values[j]), quad.error + float(tails.errors[j])


def point(interval_a: float, u: float) -> float:
    return interval_a * math.exp(u) if u < 709.0 else math.inf
