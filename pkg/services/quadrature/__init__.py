from .simpson import QuadResult, adaptive_simpson  # noqa: F401
