"""Intuitionistic fuzzy pairs and their two coordinate systems.

A pair ``(mu, nu)`` holds a degree of truth and a degree of falsity with
``mu + nu <= 1``.  The same information can be written in the implicit
coordinates ``(tau, pi)`` where ``tau = mu - nu`` is the net truth and
``pi = 1 - mu - nu`` the degree of incompleteness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "EPS_VALIDATE",
    "DomainViolation",
    "IfsPair",
    "SecondaryPair",
    "make_pair",
    "make_secondary",
    "incompleteness",
    "net_truth",
    "ambiguity",
    "to_secondary",
    "from_secondary",
    "complement",
    "triangle_grid",
    "step_divides_one",
]

#: Slack accepted on every constraint before a value is rejected.
EPS_VALIDATE = 1e-9


class DomainViolation(ValueError):
    """A value lies outside the admissible region by more than ``EPS_VALIDATE``."""


def _check_unit(name: str, value: float) -> float:
    value = float(value)
    if math.isnan(value) or value < -EPS_VALIDATE or value > 1.0 + EPS_VALIDATE:
        raise DomainViolation(f"{name}={value!r} outside [0, 1]")
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class IfsPair:
    """Validated explicit-space pair ``(mu, nu)``.

    Construction clips each coordinate into [0, 1] and, when
    ``mu + nu`` exceeds one by at most ``EPS_VALIDATE``, removes half of
    the excess from each coordinate (this keeps ``mu - nu`` unchanged).
    Anything further out raises :class:`DomainViolation`.
    """

    mu: float
    nu: float

    def __post_init__(self) -> None:
        mu = _check_unit("mu", self.mu)
        nu = _check_unit("nu", self.nu)
        excess = mu + nu - 1.0
        if excess > EPS_VALIDATE:
            raise DomainViolation(f"mu + nu = {mu + nu!r} exceeds 1")
        if excess > 0.0:
            mu -= excess / 2.0
            nu -= excess / 2.0
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    def __iter__(self):
        yield self.mu
        yield self.nu


@dataclass(frozen=True)
class SecondaryPair:
    """Validated implicit-space pair ``(tau, pi)`` with ``|tau| + pi <= 1``.

    Boundary slack is repaired like :class:`IfsPair`: clip, then split any
    excess of ``|tau| + pi`` over one equally between ``|tau|`` and ``pi``.
    """

    tau: float
    pi: float

    def __post_init__(self) -> None:
        tau = float(self.tau)
        if math.isnan(tau) or abs(tau) > 1.0 + EPS_VALIDATE:
            raise DomainViolation(f"tau={tau!r} outside [-1, 1]")
        tau = min(max(tau, -1.0), 1.0)
        pi = _check_unit("pi", self.pi)
        excess = abs(tau) + pi - 1.0
        if excess > EPS_VALIDATE:
            raise DomainViolation(f"|tau| + pi = {abs(tau) + pi!r} exceeds 1")
        if excess > 0.0:
            tau = math.copysign(abs(tau) - excess / 2.0, tau)
            pi -= excess / 2.0
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "pi", pi)

    def __iter__(self):
        yield self.tau
        yield self.pi


def make_pair(mu: float, nu: float) -> IfsPair:
    """Build a validated :class:`IfsPair` from raw reals."""
    return IfsPair(mu, nu)


def make_secondary(tau: float, pi: float) -> SecondaryPair:
    return SecondaryPair(tau, pi)


def incompleteness(p: IfsPair) -> float:
    """Degree of incompleteness ``pi = 1 - mu - nu``."""
    # boundary repair can leave mu + nu one ulp above 1
    return max(0.0, 1.0 - (p.mu + p.nu))


def net_truth(p: IfsPair) -> float:
    """Net truth ``tau = mu - nu``."""
    return p.mu - p.nu


def ambiguity(p: IfsPair) -> float:
    """Degree of ambiguity ``1 - |tau| - pi``, i.e. ``2 * min(mu, nu)``."""
    return max(0.0, 1.0 - abs(net_truth(p)) - incompleteness(p))


def to_secondary(p: IfsPair) -> SecondaryPair:
    return SecondaryPair(net_truth(p), incompleteness(p))


def from_secondary(s: SecondaryPair) -> IfsPair:
    return IfsPair((1.0 - s.pi + s.tau) / 2.0, (1.0 - s.pi - s.tau) / 2.0)


def complement(p: IfsPair) -> IfsPair:
    """Swap truth and falsity."""
    return IfsPair(p.nu, p.mu)


def step_divides_one(step: float, tol: float = 1e-9) -> bool:
    """True when ``1 / step`` is an integer within ``tol``."""
    if not step > 0:
        return False
    n = round(1.0 / step)
    return n >= 1 and abs(n * step - 1.0) <= tol


def triangle_grid(step: float) -> list[IfsPair]:
    """All lattice pairs with spacing ``step`` inside the admissible triangle.

    Points are listed row-major: ``mu`` ascending, then ``nu`` ascending.
    When ``step`` divides one the coordinates are computed as ``i / n`` so
    the boundary ``mu + nu = 1`` is hit exactly.
    """
    if not step > 0:
        raise ValueError(f"step must be positive, got {step!r}")
    if step_divides_one(step):
        n = round(1.0 / step)
        return [IfsPair(i / n, j / n) for i in range(n + 1) for j in range(n + 1 - i)]
    n = int(math.floor(1.0 / step + 1e-12))
    return [
        IfsPair(i * step, j * step)
        for i in range(n + 1)
        for j in range(n + 1)
        if i * step + j * step <= 1.0 + 1e-12
    ]
