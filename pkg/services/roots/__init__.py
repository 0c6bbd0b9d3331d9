from .alpha import alpha_upper_weight, solve_alpha_extremal, solve_alpha_extremal_array, solve_alpha_p2  # noqa: F401
from .bracket import RootResult, bisect_secant  # noqa: F401
