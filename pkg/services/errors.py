class DomainError(ValueError):
    """input outside an operation's stated domain"""


class LemmaDomainError(DomainError):
    """lemma sample outside the lemma's hypotheses"""


class WitnessInvalidError(ValueError):
    pass


class InvalidWeightError(ValueError):
    """weight radicand is not positive, the A parameter is too small for this n"""


class QuadratureError(ValueError):
    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} achieved {achieved:.3e}")
        self.achieved = achieved


class SummationOverflowError(ValueError):
    pass
