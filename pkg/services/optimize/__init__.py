from .golden import golden_section_min, grid_refine_max, grid_refine_min  # noqa: F401
