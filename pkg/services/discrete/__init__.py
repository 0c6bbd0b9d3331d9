from .bounds_report import DnBoundsReport, sandwich_p2  # noqa: F401
from .certificates import lower_certificate_discrete, upper_certificate_discrete  # noqa: F401
from .operator import as_array, hardy_adjoint_average, hardy_average, hardy_ratio_discrete  # noqa: F401
from .power_method import PowerResult, dn_power_method  # noqa: F401
from .witness import build_astar, build_default_weight, build_mu_weight  # noqa: F401
