"""Measures of information for intuitionistic fuzzy pairs.

Coordinate transforms, a normalized distance and similarity, certainty,
score and uncertainty, escort fuzzy pairs, and the Shannon entropy with
its fuzziness / incompleteness decomposition.
"""

from .core import (
    EPS_VALIDATE,
    DomainViolation,
    IfsPair,
    SecondaryPair,
    ambiguity,
    complement,
    from_secondary,
    incompleteness,
    make_pair,
    make_secondary,
    net_truth,
    to_secondary,
    triangle_grid,
)
from .distance import (
    CORNER,
    DistanceResult,
    compare,
    distance,
    distance_ratio_form,
    find_triangle_violation,
    l1_distance,
    similarity,
)
from .entropy import (
    FORMS,
    LN2,
    EntropyBreakdown,
    EntropyPartials,
    EscortPair,
    NonDifferentiable,
    entropy,
    entropy_decomposition,
    entropy_normalized,
    entropy_partials,
    entropy_variant,
    escort,
    fuzziness,
    fuzzy_shannon,
    incompleteness_entropy,
    jensen_bound,
)
from .measures import (
    MeasureReport,
    certainty,
    measure_report,
    score,
    uncertainty,
)

__version__ = "0.1.0"

__all__ = [
    "EPS_VALIDATE",
    "DomainViolation",
    "IfsPair",
    "SecondaryPair",
    "ambiguity",
    "complement",
    "from_secondary",
    "incompleteness",
    "make_pair",
    "make_secondary",
    "net_truth",
    "to_secondary",
    "triangle_grid",
    "CORNER",
    "DistanceResult",
    "compare",
    "distance",
    "distance_ratio_form",
    "find_triangle_violation",
    "l1_distance",
    "similarity",
    "FORMS",
    "LN2",
    "EntropyBreakdown",
    "EntropyPartials",
    "EscortPair",
    "NonDifferentiable",
    "entropy",
    "entropy_decomposition",
    "entropy_normalized",
    "entropy_partials",
    "entropy_variant",
    "escort",
    "fuzziness",
    "fuzzy_shannon",
    "incompleteness_entropy",
    "jensen_bound",
    "MeasureReport",
    "certainty",
    "measure_report",
    "score",
    "uncertainty",
]
