import math

import numpy as np

import models
import services.errors
from services.lemmas import diagnostic, predicates

DIAGNOSTIC_ID = "L2_15"
INTEGER_VARIABLES = {"i", "n"}


def _sample_value(sample: dict, name: str):
    if name == "L" and "L" not in sample and "b" in sample:
        if not sample["b"] > 1.0:
            raise services.errors.LemmaDomainError("b must be greater than 1")
        return math.log(sample["b"])

    if name not in sample:
        raise services.errors.LemmaDomainError(f"sample is missing {name}")

    value = sample[name]

    if name in INTEGER_VARIABLES:
        if int(value) != value:
            raise services.errors.LemmaDomainError(f"{name} must be an integer")
        return int(value)

    return float(value)


def check_lemma(id: str, sample: dict) -> models.LemmaCheck:
    """
    Evaluate one auxiliary inequality at one sample.

    Out of domain samples raise LemmaDomainError, they are never reported as failures.
    """
    if id == DIAGNOSTIC_ID:
        p, A, i, n = (_sample_value(sample, name) for name in ("p", "A", "i", "n"))
        value = float(diagnostic.residual(p, A, np.array([i]), n)[0])

        return models.LemmaCheck(id=id, sample=dict(sample), holds=True, margin=value, strictness=models.lemma_check.DIAGNOSTIC, lhs=value)

    if id not in predicates.LEMMAS:
        raise services.errors.LemmaDomainError(f"unknown lemma id {id}")

    lemma = predicates.LEMMAS[id]
    args = []

    for name in lemma.variables:
        value = _sample_value(sample, name)
        if name == "p" and lemma.tabled:
            args.append(value)
        else:
            args.append(np.array([value], dtype=np.int64 if name in INTEGER_VARIABLES else float))

    evaluation = lemma.evaluate(*args)

    return models.LemmaCheck(
        id=id,
        sample=dict(sample),
        holds=bool(predicates.holds(evaluation)[0]),
        margin=float(evaluation.margin[0]),
        strictness=models.lemma_check.STRICT,
        lhs=float(evaluation.lhs[0]),
        rhs=float(evaluation.rhs[0]),
    )
