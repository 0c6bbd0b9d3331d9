import models
import services.roots


def exact_constant_p2(interval: models.Interval) -> float:
    """4/(1 + 4 alpha^2), the sharp constant on (a, b) for p = 2"""
    root = services.roots.solve_alpha_p2(interval.L)

    return 4.0 / (1.0 + 4.0 * root.alpha**2)
