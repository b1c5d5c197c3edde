"""Escort fuzzy pairs and the Shannon entropy of intuitionistic fuzzy pairs.

The escort of ``(mu, nu)`` is the fuzzy pair ``(mu_hat, nu_hat)`` with
``mu_hat + nu_hat = 1`` and ``mu_hat - nu_hat`` equal to the score.  The
entropy of a pair is the binary Shannon entropy of its escort.  Five
closed forms of that entropy are provided for cross-checking, together
with the normalized entropy, its split into a fuzziness term and an
incompleteness term, and the analytic partial derivatives with respect
to ``|tau|`` and ``pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .core import IfsPair, _check_unit, incompleteness, net_truth
from .measures import certainty, score

__all__ = [
    "LN2",
    "FORMS",
    "NonDifferentiable",
    "EscortPair",
    "EntropyBreakdown",
    "EntropyPartials",
    "escort",
    "fuzzy_shannon",
    "entropy",
    "entropy_variant",
    "tau_pi_form",
    "entropy_normalized",
    "fuzziness",
    "incompleteness_entropy",
    "jensen_bound",
    "entropy_decomposition",
    "entropy_partials",
]

LN2 = math.log(2.0)

FORMS = ("explicit", "tau_pi", "score", "abs_score", "certainty")


class NonDifferentiable(ArithmeticError):
    """Raised where the entropy has no partial derivatives in ``(|tau|, pi)``."""


@dataclass(frozen=True)
class EscortPair:
    mu_hat: float
    nu_hat: float


@dataclass(frozen=True)
class EntropyBreakdown:
    """Entropy figures of one pair.

    ``shannon`` is in nats; the other three are normalized to [0, 1] and
    ``normalized == fuzziness + incompleteness_part``.
    """

    shannon: float
    normalized: float
    fuzziness: float
    incompleteness_part: float


class EntropyPartials(NamedTuple):
    d_abs_tau: float
    d_pi: float


def _xlogx(x, log):
    # 0 * log(0) is taken as 0; log(0) itself must never be evaluated
    if x == 0:
        return 0 * x
    return x * log(x)


def escort(p: IfsPair) -> EscortPair:
    """``((mu + pi) / (1 + pi), (nu + pi) / (1 + pi))``."""
    pi = incompleteness(p)
    return EscortPair((p.mu + pi) / (1.0 + pi), (p.nu + pi) / (1.0 + pi))


def fuzzy_shannon(m: float) -> float:
    """Binary entropy ``-m ln m - (1 - m) ln(1 - m)`` in nats.

    Raises
    ------
    DomainViolation
        If ``m`` is outside [0, 1].
    """
    m = _check_unit("m", m)
    if m == 0.0 or m == 1.0:
        return 0.0
    return -m * math.log(m) - (1.0 - m) * math.log(1.0 - m)


def entropy(p: IfsPair) -> float:
    """Shannon entropy of ``p`` in nats: binary entropy of the escort truth degree."""
    return fuzzy_shannon(escort(p).mu_hat)


def _explicit_form(mu, nu, pi, log):
    a = (mu + pi) / (1 + pi)
    b = (nu + pi) / (1 + pi)
    return -_xlogx(a, log) - _xlogx(b, log)


def _symmetric_form(r, log):
    return -_xlogx((1 + r) / 2, log) - _xlogx((1 - r) / 2, log)


def tau_pi_form(tau, pi, log: Callable = math.log):
    """Entropy written in implicit coordinates.

    Works on any numeric type supporting ``+ - * /`` with ints, given a
    matching ``log``; e.g. ``decimal.Decimal`` with ``Decimal.ln``.
    """
    t = tau / (1 + pi)
    return -_xlogx((1 + t) / 2, log) - _xlogx((1 - t) / 2, log)


def entropy_variant(p: IfsPair, form: str) -> float:
    """Evaluate one of the five equivalent closed forms of :func:`entropy`.

    ``form`` is one of ``explicit``, ``tau_pi``, ``score``, ``abs_score``
    or ``certainty``.
    """
    if form == "explicit":
        return _explicit_form(p.mu, p.nu, incompleteness(p), math.log)
    if form == "tau_pi":
        return tau_pi_form(net_truth(p), incompleteness(p))
    if form == "score":
        return _symmetric_form(score(p), math.log)
    if form == "abs_score":
        return _symmetric_form(abs(score(p)), math.log)
    if form == "certainty":
        return _symmetric_form(certainty(p), math.log)
    raise ValueError(f"unknown entropy form {form!r}; expected one of {FORMS}")


def entropy_normalized(p: IfsPair) -> float:
    """Entropy scaled by ``1 / ln 2`` into [0, 1]."""
    return entropy(p) / LN2


def fuzziness(p: IfsPair) -> float:
    pi = incompleteness(p)
    num = _xlogx(p.mu + pi, math.log) + _xlogx(p.nu + pi, math.log)
    return 0.0 - num / ((1.0 + pi) * LN2)


def incompleteness_entropy(p: IfsPair) -> float:
    return math.log1p(incompleteness(p)) / LN2


def jensen_bound(p: IfsPair) -> float:
    """Upper bound ``-log2((1 + pi) / 2)`` on :func:`fuzziness`."""
    return -math.log((1.0 + incompleteness(p)) / 2.0) / LN2


def entropy_decomposition(p: IfsPair) -> EntropyBreakdown:
    e_s = entropy(p)
    return EntropyBreakdown(
        shannon=e_s,
        normalized=e_s / LN2,
        fuzziness=fuzziness(p),
        incompleteness_part=incompleteness_entropy(p),
    )


def entropy_partials(p: IfsPair) -> EntropyPartials:
    """Analytic partials of the (nat) entropy w.r.t. ``|tau|`` and ``pi``.

    Raises :class:`NonDifferentiable` on the diagonal ``tau = 0`` and at
    the corners where the certainty reaches 1.
    """
    abs_tau = abs(net_truth(p))
    pi = incompleteness(p)
    if abs_tau == 0.0:
        raise NonDifferentiable("|tau| = 0: entropy is not smooth in |tau| there")
    g = abs_tau / (1.0 + pi)
    if g >= 1.0:
        raise NonDifferentiable("certainty = 1: log((1-g)/(1+g)) is singular")
    dlog = math.log((1.0 - g) / (1.0 + g))
    return EntropyPartials(
        d_abs_tau=0.5 / (1.0 + pi) * dlog,
        d_pi=-0.5 * abs_tau / (1.0 + pi) ** 2 * dlog,
    )
