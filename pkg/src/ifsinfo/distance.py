"""L1 distance and the normalized distance/similarity built on it.

The normalized distance divides the L1 distance between ``P`` and ``Q`` by
the length of the detour ``P -> C -> Q`` through the auxiliary corner
``C = (1, 1)``.  ``C`` is outside the admissible triangle, so it is kept
as a raw coordinate tuple and never wrapped in :class:`IfsPair`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import IfsPair, incompleteness, triangle_grid

__all__ = [
    "CORNER",
    "DistanceResult",
    "l1_distance",
    "distance",
    "distance_ratio_form",
    "similarity",
    "compare",
    "find_triangle_violation",
]

#: Auxiliary point of the triangle construction.
CORNER = (1.0, 1.0)

TRIANGLE_SLACK = 1e-12


@dataclass(frozen=True)
class DistanceResult:
    l1: float
    normalized: float
    similarity: float


def _l1(p, q) -> float:
    return abs(p[0] - q[0]) + abs(p[1] - q[1])


def l1_distance(p: IfsPair, q: IfsPair) -> float:
    """``|mu_p - mu_q| + |nu_p - nu_q|``, in [0, 2]."""
    return abs(p.mu - q.mu) + abs(p.nu - q.nu)


def distance(p: IfsPair, q: IfsPair) -> float:
    """Normalized distance ``l1(p, q) / (2 + pi_p + pi_q)``, in [0, 1]."""
    return l1_distance(p, q) / (2.0 + (incompleteness(p) + incompleteness(q)))


def distance_ratio_form(p: IfsPair, q: IfsPair) -> float:
    """Same quantity as :func:`distance`, evaluated as ``d(P,Q) / (d(P,C) + d(C,Q))``."""
    pt, qt = (p.mu, p.nu), (q.mu, q.nu)
    return _l1(pt, qt) / (_l1(pt, CORNER) + _l1(CORNER, qt))


def similarity(p: IfsPair, q: IfsPair) -> float:
    return 1.0 - distance(p, q)


def compare(p: IfsPair, q: IfsPair) -> DistanceResult:
    d = distance(p, q)
    return DistanceResult(l1=l1_distance(p, q), normalized=d, similarity=1.0 - d)


def find_triangle_violation(
    step: float,
    metric: Callable[[IfsPair, IfsPair], float] = distance,
) -> Optional[tuple[IfsPair, IfsPair, IfsPair]]:
    """Search the lattice for a triple breaking the triangle inequality.

    Scans ``P``, then ``Q``, then ``R`` over :func:`triangle_grid` in
    row-major order and returns the first ``(P, Q, R)`` with
    ``metric(P, R) > metric(P, Q) + metric(Q, R) + 1e-12``, or ``None``.

    ``step`` must lie in (0, 0.5]; the cost is cubic in the number of
    lattice points, so steps much below 0.05 are slow.
    """
    if not 0.0 < step <= 0.5:
        raise ValueError(f"step must lie in (0, 0.5], got {step!r}")
    grid = triangle_grid(step)
    n = len(grid)
    table = [[metric(a, b) for b in grid] for a in grid]
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            d_ij = row_i[j]
            row_j = table[j]
            for k in range(n):
                if row_i[k] > d_ij + row_j[k] + TRIANGLE_SLACK:
                    return grid[i], grid[j], grid[k]
    return None
