from .rate import MIN_POINTS, FitRate, coefficient_names, design_matrix, reference_coefficient  # noqa: F401
