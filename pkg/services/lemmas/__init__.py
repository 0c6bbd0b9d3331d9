from .check import DIAGNOSTIC_ID, check_lemma  # noqa: F401
from .hunt import Hunt, Summary  # noqa: F401
from .predicates import LEMMAS, TOLERANCE, Evaluation  # noqa: F401
