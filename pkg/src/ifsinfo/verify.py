"""Property suites for every identity, bound and axiom of the calculus.

Each check returns a :class:`CheckResult` with the largest deviation it
observed and the tolerance it was judged against.  For equalities the
deviation is the largest absolute difference; for inequalities it is the
largest amount by which the inequality was broken (0 when it always held).
:func:`run_all` executes the whole battery; the ``verify`` CLI command and
the acceptance tests are thin wrappers around it.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from decimal import Decimal
from typing import Callable, Iterable, Mapping, Optional

import numpy as np

from .core import (
    IfsPair,
    ambiguity,
    complement,
    from_secondary,
    incompleteness,
    net_truth,
    to_secondary,
    triangle_grid,
)
from .distance import (
    CORNER,
    distance,
    distance_ratio_form,
    find_triangle_violation,
    l1_distance,
)
from .entropy import (
    FORMS,
    LN2,
    entropy,
    entropy_decomposition,
    entropy_normalized,
    entropy_partials,
    entropy_variant,
    escort,
    jensen_bound,
    tau_pi_form,
)
from .measures import (
    certainty,
    score,
    score_tau_pi,
    uncertainty,
    uncertainty_tau_pi,
)

DEFAULT_SEED = 20240917
GRID_STEP = 0.01
MONOTONE_SAMPLES = 10_000
GRADIENT_POINTS = 1_000
FD_STEP = 1e-6
FD_MARGIN = 2e-6
VIOLATION_STEP = 0.25

DEFAULT_TOLERANCES: dict[str, float] = {
    "boundary_axioms": 1e-12,
    "coordinate_roundtrip": 1e-12,
    "complement_identities": 1e-15,
    "ambiguity_identity": 1e-12,
    "distance_contract": 0.0,
    "distance_ratio_form": 1e-12,
    "corner_triangle": 0.0,
    "certainty_is_distance_to_complement": 1e-15,
    "non_metricity": 0.0,
    "measure_symmetries": 0.0,
    "measure_equivalent_forms": 1e-15,
    "measure_report_identities": 1e-15,
    "monotone_certainty": 1e-12,
    "monotone_score": 1e-12,
    "monotone_score_componentwise": 1e-12,
    "antitone_uncertainty": 1e-12,
    "antitone_entropy": 1e-12,
    "escort_contract": 1e-12,
    "five_form_agreement": 1e-12,
    "entropy_symmetry": 1e-12,
    "gradient_check": 1e-5,
    "decomposition": 1e-12,
    "jensen_bound": 1e-12,
    "decomposition_maxima": 1e-12,
    "entropy_boundary_continuity": 1e-6,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    deviation: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name:<38} max_dev={self.deviation:.3e}  tol={self.tolerance:.1e}"
        return f"{text}  {self.detail}" if self.detail else text


def _result(name: str, deviation: float, tol: float, detail: str = "") -> CheckResult:
    deviation = float(deviation)
    passed = not math.isnan(deviation) and deviation <= tol
    return CheckResult(name, passed, deviation, tol, detail)


def sample_pairs(rng: np.random.Generator, n: int) -> list[IfsPair]:
    """``n`` pairs drawn uniformly from the admissible triangle."""
    u = rng.random((n, 2))
    flip = u.sum(axis=1) > 1.0
    u[flip] = 1.0 - u[flip]
    return [IfsPair(a, b) for a, b in u]


def _mixed_pairs(rng: np.random.Generator, n: int, lattice: list[IfsPair]) -> list[IfsPair]:
    # half continuous, half lattice points so that ties in the hypotheses occur
    cont = sample_pairs(rng, n - n // 2)
    picks = rng.integers(0, len(lattice), size=n // 2)
    return cont + [lattice[i] for i in picks]


# -- individual checks -----------------------------------------------------


def check_boundary_axioms(tol: float) -> CheckResult:
    one_zero, zero_one = IfsPair(1.0, 0.0), IfsPair(0.0, 1.0)
    expected: list[tuple[float, float]] = [
        (certainty(one_zero), 1.0),
        (certainty(zero_one), 1.0),
        (score(one_zero), 1.0),
        (score(zero_one), -1.0),
        (uncertainty(one_zero), 0.0),
        (uncertainty(zero_one), 0.0),
        (entropy_normalized(one_zero), 0.0),
        (entropy_normalized(zero_one), 0.0),
    ]
    for k in range(6):
        x = IfsPair(k / 10, k / 10)
        expected += [
            (certainty(x), 0.0),
            (score(x), 0.0),
            (uncertainty(x), 1.0),
            (entropy_normalized(x), 1.0),
        ]
    dev = max(abs(got - want) for got, want in expected)
    return _result("boundary_axioms", dev, tol, f"{len(expected)} values")


def check_coordinate_roundtrip(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        s = to_secondary(p)
        q = from_secondary(s)
        dev = max(dev, abs(q.mu - p.mu), abs(q.nu - p.nu))
        t = to_secondary(from_secondary(s))
        dev = max(dev, abs(t.tau - s.tau), abs(t.pi - s.pi))
    return _result("coordinate_roundtrip", dev, tol, f"{len(grid)} points")


def check_complement_identities(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    involution_ok = True
    for p in grid:
        c = complement(p)
        involution_ok &= complement(c) == p
        dev = max(
            dev,
            abs(incompleteness(c) - incompleteness(p)),
            abs(net_truth(c) + net_truth(p)),
        )
    if not involution_ok:
        dev = math.inf
    return _result("complement_identities", dev, tol, "involution, pi preserved, tau negated")


def check_ambiguity_identity(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = max(
        abs(incompleteness(p) + abs(net_truth(p)) + ambiguity(p) - 1.0) for p in grid
    )
    return _result("ambiguity_identity", dev, tol, "pi + |tau| + alpha = 1")


def check_distance_contract(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        dev = max(dev, abs(distance(p, p)))
    # pairwise over a coarser subgrid keeps the cost quadratic in ~231 points
    sub = triangle_grid(0.05)
    for p in sub:
        for q in sub:
            d = distance(p, q)
            dev = max(dev, -d, d - 1.0, abs(d - distance(q, p)))
    return _result("distance_contract", dev, tol, "bounds, identity, symmetry")


def check_distance_ratio_form(grid: list[IfsPair], tol: float) -> CheckResult:
    sub = triangle_grid(0.05)
    dev = 0.0
    for p in sub:
        for q in sub:
            dev = max(dev, abs(distance(p, q) - distance_ratio_form(p, q)))
    for p, q in zip(grid, reversed(grid)):
        dev = max(dev, abs(distance(p, q) - distance_ratio_form(p, q)))
    return _result("distance_ratio_form", dev, tol)


def check_corner_triangle(tol: float) -> CheckResult:
    sub = triangle_grid(0.05)
    dev = 0.0
    for p in sub:
        dpc = abs(p.mu - CORNER[0]) + abs(p.nu - CORNER[1])
        for q in sub:
            dcq = abs(CORNER[0] - q.mu) + abs(CORNER[1] - q.nu)
            dev = max(dev, l1_distance(p, q) - (dpc + dcq))
            dev = max(dev, 2.0 - (2.0 + incompleteness(p) + incompleteness(q)))
    return _result("corner_triangle", dev, tol, "L1 detour via (1,1); denominator >= 2")


def check_certainty_is_distance(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = max(abs(certainty(p) - distance(p, complement(p))) for p in grid)
    return _result("certainty_is_distance_to_complement", dev, tol)


def check_non_metricity(step: float, tol: float) -> CheckResult:
    witness = find_triangle_violation(step)
    if witness is None:
        return CheckResult("non_metricity", False, math.inf, tol, f"no violation at step {step}")
    p, q, r = witness
    gap = distance(p, r) - distance(p, q) - distance(q, r)
    detail = f"D(P,R) - D(P,Q) - D(Q,R) = {gap:.6g} for P={tuple(p)} Q={tuple(q)} R={tuple(r)}"
    return _result("non_metricity", 0.0, tol, detail)


def check_measure_symmetries(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        c = complement(p)
        dev = max(
            dev,
            abs(certainty(p) - certainty(c)),
            abs(score(p) + score(c)),
            abs(uncertainty(p) - uncertainty(c)),
        )
    return _result("measure_symmetries", dev, tol, "g, e symmetric; r antisymmetric")


def check_measure_equivalent_forms(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        dev = max(
            dev,
            abs(score(p) - score_tau_pi(p)),
            abs(uncertainty(p) - uncertainty_tau_pi(p)),
        )
    return _result("measure_equivalent_forms", dev, tol, "(mu,nu) vs (tau,pi) forms of r and e")


def check_measure_report_identities(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        g, r, e = certainty(p), score(p), uncertainty(p)
        dev = max(dev, abs(e - (1.0 - g)), abs(abs(r) - g), -g, g - 1.0, abs(r) - 1.0)
    return _result("measure_report_identities", dev, tol, "e = 1 - g, |r| = g, ranges")


def _monotone_check(
    name: str,
    measure: Callable[[IfsPair], float],
    hypothesis: Callable[[IfsPair, IfsPair], bool],
    rng: np.random.Generator,
    n_required: int,
    lattice: list[IfsPair],
    tol: float,
) -> CheckResult:
    """Largest ``measure(p1) - measure(p2)`` over pairs satisfying ``hypothesis``."""
    accepted = 0
    dev = -math.inf
    worst = None
    while accepted < n_required:
        batch = 4 * (n_required - accepted) + 64
        first = _mixed_pairs(rng, batch, lattice)
        second = _mixed_pairs(rng, batch, lattice)
        for p1, p2 in zip(first, second):
            if not hypothesis(p1, p2):
                continue
            accepted += 1
            gap = measure(p1) - measure(p2)
            if gap > dev:
                dev, worst = gap, (p1, p2)
    detail = f"{accepted} hypothesis-satisfying pairs"
    if dev > tol and worst is not None:
        p1, p2 = worst
        detail += f"; worst p1=({p1.mu:.6g}, {p1.nu:.6g}) p2=({p2.mu:.6g}, {p2.nu:.6g})"
    return _result(name, max(dev, 0.0), tol, detail)


def _tighter(p1: IfsPair, p2: IfsPair) -> bool:
    # |mu1 - nu1| <= |mu2 - nu2| and mu1 + nu1 <= mu2 + nu2
    return abs(p1.mu - p1.nu) <= abs(p2.mu - p2.nu) and p1.mu + p1.nu <= p2.mu + p2.nu


def _ordered(p1: IfsPair, p2: IfsPair) -> bool:
    return p1.mu - p1.nu <= p2.mu - p2.nu and p1.mu + p1.nu <= p2.mu + p2.nu


def _componentwise(p1: IfsPair, p2: IfsPair) -> bool:
    return p1.mu <= p2.mu and p1.nu >= p2.nu


def _looser(p1: IfsPair, p2: IfsPair) -> bool:
    return abs(p1.mu - p1.nu) >= abs(p2.mu - p2.nu) and p1.mu + p1.nu >= p2.mu + p2.nu


def check_escort_contract(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        h = escort(p)
        pi = incompleteness(p)
        dev = max(
            dev,
            abs(h.mu_hat + h.nu_hat - 1.0),
            abs(h.mu_hat - h.nu_hat - score(p)),
            p.mu - h.mu_hat,
            h.mu_hat - (p.mu + pi),
            p.nu - h.nu_hat,
            h.nu_hat - (p.nu + pi),
        )
    return _result("escort_contract", dev, tol, "sum 1, difference = score, sandwich")


def check_five_form_agreement(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        values = [entropy(p)] + [entropy_variant(p, form) for form in FORMS]
        dev = max(dev, max(values) - min(values))
    return _result("five_form_agreement", dev, tol, f"{len(FORMS)} forms + canonical, {len(grid)} points")


def check_entropy_symmetry(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        c = complement(p)
        dev = max(dev, abs(entropy(p) - entropy(c)))
        if entropy_variant(p, "abs_score") != entropy_variant(c, "abs_score"):
            dev = math.inf
    return _result("entropy_symmetry", dev, tol)


def _fd_partials(abs_tau: float, pi: float, h: float) -> tuple[float, float]:
    """Central differences of the implicit-coordinate entropy form.

    Evaluated in 40-digit decimal arithmetic so that cancellation in the
    differences does not swamp derivatives that are ~|tau|**2 small.
    """
    with decimal.localcontext(decimal.Context(prec=40)):
        a, p, step = Decimal(abs_tau), Decimal(pi), Decimal(h)

        def f(x, y):
            return tau_pi_form(x, y, log=Decimal.ln)

        da = (f(a + step, p) - f(a - step, p)) / (2 * step)
        dp = (f(a, p + step) - f(a, p - step)) / (2 * step)
    return float(da), float(dp)


def gradient_points(rng: np.random.Generator, n: int, margin: float = FD_MARGIN) -> list[IfsPair]:
    """Random pairs at least ``margin`` away from ``|tau| = 0``, ``pi = 0`` and ``|tau| + pi = 1``."""
    out: list[IfsPair] = []
    while len(out) < n:
        for p in sample_pairs(rng, n):
            a, pi = abs(net_truth(p)), incompleteness(p)
            if a >= margin and pi >= margin and 1.0 - a - pi >= margin:
                out.append(p)
                if len(out) == n:
                    break
    return out


def check_gradient(
    rng: np.random.Generator, n_points: int, tol: float, h: float = FD_STEP
) -> CheckResult:
    worst = 0.0
    sign_errors = 0
    for p in gradient_points(rng, n_points):
        analytic = entropy_partials(p)
        fd_tau, fd_pi = _fd_partials(abs(net_truth(p)), incompleteness(p), h)
        worst = max(
            worst,
            abs(fd_tau - analytic.d_abs_tau) / abs(analytic.d_abs_tau),
            abs(fd_pi - analytic.d_pi) / abs(analytic.d_pi),
        )
        sign_errors += analytic.d_abs_tau > 0.0 or analytic.d_pi < 0.0
    if sign_errors:
        worst = math.inf
    detail = f"{n_points} interior points, relative error, {sign_errors} sign violations"
    return _result("gradient_check", worst, tol, detail)


def check_decomposition(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = 0.0
    for p in grid:
        b = entropy_decomposition(p)
        dev = max(
            dev,
            abs(b.fuzziness + b.incompleteness_part - b.normalized),
            abs(b.normalized - b.shannon / LN2),
        )
    return _result("decomposition", dev, tol, "E_A + E_U = E_SN")


def check_jensen_bound(grid: list[IfsPair], tol: float) -> CheckResult:
    dev = max(entropy_decomposition(p).fuzziness - jensen_bound(p) for p in grid)
    return _result("jensen_bound", max(dev, 0.0), tol)


def check_decomposition_maxima(grid: list[IfsPair], tol: float) -> CheckResult:
    parts = [entropy_decomposition(p) for p in grid]
    fa = np.array([b.fuzziness for b in parts])
    fu = np.array([b.incompleteness_part for b in parts])
    i_a, i_u = int(np.argmax(fa)), int(np.argmax(fu))
    ok = grid[i_a] == IfsPair(0.5, 0.5) and grid[i_u] == IfsPair(0.0, 0.0)
    # the maximizer must be unique up to tol
    ok &= int(np.sum(fa >= fa[i_a] - tol)) == 1 and int(np.sum(fu >= fu[i_u] - tol)) == 1
    dev = max(abs(fa[i_a] - 1.0), abs(fu[i_u] - 1.0)) if ok else math.inf
    detail = f"argmax E_A at {tuple(grid[i_a])}, argmax E_U at {tuple(grid[i_u])}"
    return _result("decomposition_maxima", dev, tol, detail)


def check_entropy_boundary_continuity(grid: list[IfsPair], tol: float) -> CheckResult:
    delta = 1e-9
    dev = 0.0
    boundary = [p for p in grid if p.mu == 0.0 or p.nu == 0.0 or incompleteness(p) == 0.0]
    for p in boundary:
        e = entropy(p)
        if not math.isfinite(e):
            return _result("entropy_boundary_continuity", math.inf, tol, f"non-finite at {tuple(p)}")
        # nudge towards the centroid of the triangle
        mu = p.mu + delta * (1 / 3 - p.mu)
        nu = p.nu + delta * (1 / 3 - p.nu)
        dev = max(dev, abs(entropy(IfsPair(mu, nu)) - e))
    return _result("entropy_boundary_continuity", dev, tol, f"{len(boundary)} boundary points")


# -- driver ---------------------------------------------------------------


def run_all(
    seed: int = DEFAULT_SEED,
    tolerances: Optional[Mapping[str, float]] = None,
    monotone_samples: int = MONOTONE_SAMPLES,
    gradient_points_count: int = GRADIENT_POINTS,
    grid_step: float = GRID_STEP,
    violation_step: float = VIOLATION_STEP,
) -> list[CheckResult]:
    """Run every property suite and return one result per property."""
    tol = dict(DEFAULT_TOLERANCES)
    if tolerances:
        unknown = set(tolerances) - set(tol)
        if unknown:
            raise KeyError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")
        tol.update(tolerances)

    rng = np.random.default_rng(seed)
    grid = triangle_grid(grid_step)
    lattice = triangle_grid(0.05)

    results = [
        check_boundary_axioms(tol["boundary_axioms"]),
        check_coordinate_roundtrip(grid, tol["coordinate_roundtrip"]),
        check_complement_identities(grid, tol["complement_identities"]),
        check_ambiguity_identity(grid, tol["ambiguity_identity"]),
        check_distance_contract(grid, tol["distance_contract"]),
        check_distance_ratio_form(grid, tol["distance_ratio_form"]),
        check_corner_triangle(tol["corner_triangle"]),
        check_certainty_is_distance(grid, tol["certainty_is_distance_to_complement"]),
        check_non_metricity(violation_step, tol["non_metricity"]),
        check_measure_symmetries(grid, tol["measure_symmetries"]),
        check_measure_equivalent_forms(grid, tol["measure_equivalent_forms"]),
        check_measure_report_identities(grid, tol["measure_report_identities"]),
    ]
    monotone = [
        ("monotone_certainty", certainty, _tighter),
        ("monotone_score", score, _ordered),
        ("monotone_score_componentwise", score, _componentwise),
        ("antitone_uncertainty", uncertainty, _looser),
        ("antitone_entropy", entropy_normalized, _looser),
    ]
    for name, measure, hyp in monotone:
        results.append(
            _monotone_check(name, measure, hyp, rng, monotone_samples, lattice, tol[name])
        )
    results += [
        check_escort_contract(grid, tol["escort_contract"]),
        check_five_form_agreement(grid, tol["five_form_agreement"]),
        check_entropy_symmetry(grid, tol["entropy_symmetry"]),
        check_gradient(rng, gradient_points_count, tol["gradient_check"]),
        check_decomposition(grid, tol["decomposition"]),
        check_jensen_bound(grid, tol["jensen_bound"]),
        check_decomposition_maxima(grid, tol["decomposition_maxima"]),
        check_entropy_boundary_continuity(grid, tol["entropy_boundary_continuity"]),
    ]
    return results


def format_report(results: Iterable[CheckResult], seed: int) -> str:
    results = list(results)
    failed = sum(not r.passed for r in results)
    lines = [f"seed={seed}"]
    lines += [r.line() for r in results]
    lines.append(f"{len(results) - failed}/{len(results)} properties passed")
    return "\n".join(lines)
