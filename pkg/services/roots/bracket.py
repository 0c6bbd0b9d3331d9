import dataclasses
import typing


@dataclasses.dataclass
class RootResult:
    root: float
    residual: float
    iterations: int
    converged: bool


def bisect_secant(
    f: typing.Callable[[float], float],
    lo: float,
    hi: float,
    ftol: float = 1e-13,
    max_iter: int = 200,
) -> RootResult:
    """
    Bisection on a sign-changing bracket followed by one secant polish step.

    Stops at |f| <= ftol, when the bracket can no longer be halved, or after max_iter halvings.
    The secant step is kept only when it stays inside the final bracket and lowers |f|.
    """
    f_lo, f_hi = f(lo), f(hi)

    if f_lo == 0.0:
        return RootResult(lo, 0.0, 0, True)
    if f_hi == 0.0:
        return RootResult(hi, 0.0, 0, True)
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise ValueError(f"bracket [{lo}, {hi}] has no sign change")

    best, f_best = (lo, f_lo) if abs(f_lo) < abs(f_hi) else (hi, f_hi)
    iterations = 0

    while iterations < max_iter and abs(f_best) > ftol:
        mid = 0.5 * (lo + hi)

        if mid <= lo or mid >= hi:
            break

        f_mid = f(mid)
        iterations += 1

        if abs(f_mid) < abs(f_best):
            best, f_best = mid, f_mid

        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid

    if abs(f_best) > ftol and f_hi != f_lo:
        cand = hi - f_hi * (hi - lo) / (f_hi - f_lo)

        if lo < cand < hi:
            f_cand = f(cand)

            if abs(f_cand) < abs(f_best):
                best, f_best = cand, f_cand

    return RootResult(best, abs(f_best), iterations, abs(f_best) <= ftol)
