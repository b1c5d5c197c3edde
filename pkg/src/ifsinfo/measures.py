"""Certainty, score and uncertainty of an intuitionistic fuzzy pair."""

from __future__ import annotations

from dataclasses import dataclass

from .core import IfsPair, ambiguity, incompleteness, net_truth

__all__ = [
    "MeasureReport",
    "certainty",
    "score",
    "score_tau_pi",
    "uncertainty",
    "uncertainty_tau_pi",
    "measure_report",
]


@dataclass(frozen=True)
class MeasureReport:
    certainty: float
    score: float
    uncertainty: float
    ambiguity: float
    incompleteness: float


def certainty(p: IfsPair) -> float:
    """``|mu - nu| / (2 - (mu + nu))``.

    This is the normalized distance between ``p`` and its complement; it
    is 1 on the corners (1, 0) and (0, 1) and 0 on the diagonal.
    """
    return abs(p.mu - p.nu) / (2.0 - (p.mu + p.nu))


def score(p: IfsPair) -> float:
    """Signed certainty ``(mu - nu) / (2 - (mu + nu))``, in [-1, 1].

    Non-decreasing in ``mu`` and non-increasing in ``nu``.  Note that it is
    *not* monotone under the weaker ordering "larger ``mu - nu`` and larger
    ``mu + nu``": for negative net truth, shrinking ``pi`` pushes the score
    further down, e.g. ``score(0, 0.5) = -1/3 > score(0.25, 0.75) = -1/2``.
    """
    return (p.mu - p.nu) / (2.0 - (p.mu + p.nu))


def score_tau_pi(p: IfsPair) -> float:
    """Score evaluated in implicit coordinates as ``tau / (1 + pi)``."""
    return net_truth(p) / (1.0 + incompleteness(p))


def uncertainty(p: IfsPair) -> float:
    return 1.0 - abs(p.mu - p.nu) / (2.0 - (p.mu + p.nu))


def uncertainty_tau_pi(p: IfsPair) -> float:
    return 1.0 - abs(net_truth(p)) / (1.0 + incompleteness(p))


def measure_report(p: IfsPair) -> MeasureReport:
    g = certainty(p)
    return MeasureReport(
        certainty=g,
        score=score(p),
        uncertainty=1.0 - g,
        ambiguity=ambiguity(p),
        incompleteness=incompleteness(p),
    )
