from .b_bound import b_bound_classical, b_sup  # noqa: F401
from .exact import exact_constant_p2  # noqa: F401
from .lower_certificate import lower_certificate_continuous  # noqa: F401
from .ratio import ratio_continuous, ratio_continuous_budget  # noqa: F401
from .report import Report  # noqa: F401
from .upper_certificate import remark_bound, upper_bound, upper_certificate_continuous, weight_constant  # noqa: F401
from .witness import build_f_ab_p2, build_fstar, build_power, build_weight_g, prefix_fstar  # noqa: F401
