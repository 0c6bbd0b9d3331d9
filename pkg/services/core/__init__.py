from .exponents import conjugate, corollary_constant, hardy_constant, maximal_constant, threshold_log  # noqa: F401
from .log_weight import log_weight_antiderivative, log_weight_increment  # noqa: F401
from .summation import NeumaierSum, compensated_cumsum, compensated_suffix_sum, compensated_sum  # noqa: F401
