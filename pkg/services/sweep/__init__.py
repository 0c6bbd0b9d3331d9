from .cache import ALGORITHM_VERSION, ResultCache, cache_path  # noqa: F401
from .emit import format_value, record_row, render, render_records, write  # noqa: F401
from .run import Sweep, geometric_grid  # noqa: F401
