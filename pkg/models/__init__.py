from .alpha_root import AlphaRoot  # noqa: F401
from .certificate_result import CertificateResult  # noqa: F401
from .exponent import Exponent  # noqa: F401
from .extremal_function import ExtremalFunction  # noqa: F401
from .interval import Interval  # noqa: F401
from .lemma_check import LemmaCheck  # noqa: F401
from .rate_fit import RateFit  # noqa: F401
from .run_config import RunConfig  # noqa: F401
from .sweep_record import SweepRecord  # noqa: F401
from .witness_sequence import WitnessSequence  # noqa: F401
