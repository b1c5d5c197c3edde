"""Independent oracles and strategies shared by the test modules.

The oracles re-derive every quantity from its defining formula in exact
rational arithmetic (``fractions``) or 50-digit decimal arithmetic, so they
share no code path with the package.
"""

import decimal
from decimal import Decimal
from fractions import Fraction as F

from hypothesis import strategies as st

from ifsinfo import IfsPair

# one line per acceptance criterion, printed by conftest at session end
ACCEPTANCE: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}")


@st.composite
def pairs(draw):
    mu = draw(st.floats(0.0, 1.0, allow_nan=False))
    nu = draw(st.floats(0.0, 1.0 - mu, allow_nan=False))
    return IfsPair(mu, nu)


# -- exact rational oracles -------------------------------------------------


def q(x) -> F:
    return F(x) if not isinstance(x, float) else F(str(x))


def pi_exact(mu, nu) -> F:
    return 1 - q(mu) - q(nu)


def d_exact(p, r) -> F:
    (a, b), (c, d) = p, r
    num = abs(q(a) - q(c)) + abs(q(b) - q(d))
    return num / (2 + pi_exact(a, b) + pi_exact(c, d))


def score_exact(mu, nu) -> F:
    mu, nu = q(mu), q(nu)
    return (mu - nu) / (2 - mu - nu)


def escort_exact(mu, nu) -> tuple[F, F]:
    pi = pi_exact(mu, nu)
    return (q(mu) + pi) / (1 + pi), (q(nu) + pi) / (1 + pi)


# -- high-precision oracles ---------------------------------------------------

CTX = decimal.Context(prec=50)


def binary_entropy_hp(m) -> Decimal:
    """``-m ln m - (1-m) ln(1-m)`` at 50 digits; ``m`` may be a Fraction."""
    with decimal.localcontext(CTX):
        if isinstance(m, F):
            m = Decimal(m.numerator) / Decimal(m.denominator)
        else:
            m = Decimal(m)
        out = Decimal(0)
        for x in (m, 1 - m):
            if x != 0:
                out -= x * x.ln()
        return +out


def entropy_tau_pi_hp(abs_tau: Decimal, pi: Decimal) -> Decimal:
    """Entropy as a function of ``(|tau|, pi)`` written out from scratch."""
    with decimal.localcontext(CTX):
        r = abs_tau / (1 + pi)
        return binary_entropy_hp((1 + r) / 2)
