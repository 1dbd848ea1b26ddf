"""Distinguishability notions shared by the classical and quantum layers.

A notion is either a distance (larger value = states further apart) or a
similarity / overlap (larger value = states closer). The distinction decides
two things downstream: which way the data-processing and ensemble bounds go,
and whether the measurement search maximizes or minimizes.
"""

from __future__ import annotations

import enum


class DistanceNotion(enum.Enum):
    KOLMOGOROV = "kolmogorov"
    PROB_ERROR = "prob-error"
    BHATTACHARYYA = "bhattacharyya"
    RELATIVE_ENTROPY = "relative-entropy"
    QJSD = "qjsd"


# Similarity-type notions: value 1 (resp. 1/2 for PROB_ERROR) means identical.
SIMILARITY_NOTIONS = frozenset(
    {DistanceNotion.PROB_ERROR, DistanceNotion.BHATTACHARYYA}
)

ALL_NOTIONS = tuple(DistanceNotion)


def is_similarity(notion: DistanceNotion) -> bool:
    return notion in SIMILARITY_NOTIONS


def direction(notion: DistanceNotion) -> str:
    """Search direction for the measured divergence: 'max' or 'min'.

    Distances are maximized toward their ensemble bound from below,
    similarities are minimized toward it from above.
    """
    return "min" if is_similarity(notion) else "max"


def bound_satisfied(notion: DistanceNotion, measured: float, bound: float,
                    tol: float = 1e-9) -> bool:
    """Whether a measured divergence respects the ensemble bound.

    For distances the measured value must not exceed the bound; for
    similarities it must not fall below it.
    """
    if is_similarity(notion):
        return measured >= bound - tol
    return measured <= bound + tol


def violation_gap(notion: DistanceNotion, measured: float, bound: float) -> float:
    """Signed excursion past the bound (positive = violation)."""
    if is_similarity(notion):
        return bound - measured
    return measured - bound


def from_name(name: str) -> DistanceNotion:
    try:
        return DistanceNotion(name)
    except ValueError:
        valid = ", ".join(n.value for n in DistanceNotion)
        raise ValueError(f"unknown notion {name!r}; expected one of: {valid}") from None
