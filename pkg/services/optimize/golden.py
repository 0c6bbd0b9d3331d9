import math
import typing

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(
    f: typing.Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = 1e-10,
    max_iter: int = 200,
) -> tuple[float, float]:
    """local minimum of f on [lo, hi], returns (x, f(x))"""
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)

    for _ in range(max_iter):
        if hi - lo <= xtol * max(1.0, abs(lo) + abs(hi)):
            break

        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = f(d)

    return (c, fc) if fc <= fd else (d, fd)


def grid_refine_min(
    f: typing.Callable[[float], float],
    grid: np.ndarray,
    values: np.ndarray,
    starts: int = 3,
) -> tuple[float, float]:
    """
    Minimum of f seeded by its values on a grid.

    The best `starts` grid points are each refined by golden section over their
    neighbouring grid cells; the best of grid and refined values is returned.
    """
    grid = np.asarray(grid, dtype=float)
    values = np.asarray(values, dtype=float)

    order = np.argsort(values, kind="stable")
    best_x, best_f = float(grid[order[0]]), float(values[order[0]])

    for j in order[:starts]:
        lo = grid[max(j - 1, 0)]
        hi = grid[min(j + 1, grid.size - 1)]

        if hi <= lo:
            continue

        x, fx = golden_section_min(f, float(lo), float(hi))

        if fx < best_f:
            best_x, best_f = x, fx

    return best_x, best_f


def grid_refine_max(
    f: typing.Callable[[float], float],
    grid: np.ndarray,
    values: np.ndarray,
    starts: int = 3,
) -> tuple[float, float]:
    x, fx = grid_refine_min(lambda t: -f(t), grid, -np.asarray(values, dtype=float), starts=starts)

    return x, -fx
