import dataclasses
import math
import typing

import services.core
import services.errors


@dataclasses.dataclass
class QuadResult:
    value: float
    error: float
    evaluations: int


def adaptive_simpson(
    f: typing.Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    min_panels: int = 4,
    max_depth: int = 40,
) -> QuadResult:
    """
    Adaptive Simpson rule with absolute tolerance tol over [lo, hi].

    Panels are refined until the Richardson estimate |S2 - S1|/15 drops below the
    panel's share of tol; accepted panels are summed in a fixed order.
    """
    if hi < lo:
        raise services.errors.DomainError(f"quadrature bounds reversed [{lo}, {hi}]")
    if hi == lo:
        return QuadResult(0.0, 0.0, 0)

    total = services.core.NeumaierSum()
    error = services.core.NeumaierSum()
    evaluations = 0
    stack = []
    width = (hi - lo) / min_panels

    for i in reversed(range(min_panels)):
        a = lo + i * width
        b = hi if i == min_panels - 1 else a + width
        fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
        evaluations += 3
        stack.append((a, b, fa, fm, fb, (b - a) * (fa + 4.0 * fm + fb) / 6.0, tol / min_panels, 0))

    exhausted = False

    while stack:
        a, b, fa, fm, fb, whole, panel_tol, depth = stack.pop()
        m = 0.5 * (a + b)
        flm, frm = f(0.5 * (a + m)), f(0.5 * (m + b))
        evaluations += 2

        left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
        right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
        delta = left + right - whole

        if abs(delta) <= 15.0 * panel_tol or depth >= max_depth or m <= a or m >= b:
            if abs(delta) > 15.0 * panel_tol:
                exhausted = True

            total.add(left + right + delta / 15.0)
            error.add(abs(delta) / 15.0)
            continue

        stack.append((m, b, fm, frm, fb, right, 0.5 * panel_tol, depth + 1))
        stack.append((a, m, fa, flm, fm, left, 0.5 * panel_tol, depth + 1))

    if exhausted and error.value > tol:
        raise services.errors.QuadratureError(f"adaptive simpson on [{lo}, {hi}] missed tol {tol:.3e}", error.value)

    value = total.value

    if not math.isfinite(value):
        raise services.errors.QuadratureError(f"adaptive simpson on [{lo}, {hi}] not finite", math.inf)

    return QuadResult(value, error.value, evaluations)
