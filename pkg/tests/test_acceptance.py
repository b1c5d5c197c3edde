"""Exit criteria of the package, one test per criterion at its pinned tolerance.

Each test records a PASS/FAIL line that conftest prints in the terminal
summary.  Values are recomputed here from the public API, with
independent oracles where a second route exists.
"""

import csv
import decimal
from decimal import Decimal
from fractions import Fraction as F

import numpy as np
import pytest

from ifsinfo import (
    FORMS,
    SecondaryPair,
    certainty,
    complement,
    distance,
    distance_ratio_form,
    entropy_decomposition,
    entropy_normalized,
    entropy_partials,
    entropy_variant,
    escort,
    find_triangle_violation,
    from_secondary,
    incompleteness,
    jensen_bound,
    make_pair,
    net_truth,
    score,
    to_secondary,
    triangle_grid,
    uncertainty,
)
from ifsinfo.cli import main

from helpers import CTX, d_exact, entropy_tau_pi_hp, record

SEED = 20240917
GRID = triangle_grid(0.01)


def test_grid_size():
    assert len(GRID) == 5151


def test_c1_boundary_axioms():
    tol = 1e-12
    checks = [
        certainty(make_pair(1, 0)) - 1,
        certainty(make_pair(0, 1)) - 1,
        score(make_pair(1, 0)) - 1,
        score(make_pair(0, 1)) + 1,
        uncertainty(make_pair(1, 0)),
        uncertainty(make_pair(0, 1)),
        entropy_normalized(make_pair(1, 0)),
        entropy_normalized(make_pair(0, 1)),
    ]
    for k in range(6):
        x = make_pair(k / 10, k / 10)
        checks += [certainty(x), score(x), uncertainty(x) - 1, entropy_normalized(x) - 1]
    dev = max(abs(c) for c in checks)
    ok = dev <= tol
    record("1", ok, f"boundary axioms, {len(checks)} values, max dev {dev:.2e} (tol {tol:g})")
    assert ok


def test_c2_five_form_agreement():
    tol = 1e-12
    dev = max(
        max(v) - min(v) for v in ([entropy_variant(p, f) for f in FORMS] for p in GRID)
    )
    ok = dev <= tol
    record("2", ok, f"five entropy forms on 5151 points, max pairwise dev {dev:.2e} (tol {tol:g})")
    assert ok


def test_c3_escort_contract():
    tol = 1e-12
    dev = 0.0
    for p in GRID:
        h, pi, r = escort(p), incompleteness(p), score(p)
        dev = max(
            dev,
            abs(h.mu_hat + h.nu_hat - 1),
            abs(h.mu_hat - h.nu_hat - r),
            p.mu - h.mu_hat, h.mu_hat - (p.mu + pi),
            p.nu - h.nu_hat, h.nu_hat - (p.nu + pi),
        )
    ok = dev <= tol
    record("3", ok, f"escort sum/score/sandwich on grid, max dev {dev:.2e} (tol {tol:g})")
    assert ok


def _sample(rng, n):
    u = rng.random((n, 2))
    flip = u.sum(axis=1) > 1
    u[flip] = 1 - u[flip]
    return u


MONOTONE = {
    # name: (measure, hypothesis on (tau1, s1, tau2, s2) arrays)
    "g": (certainty, lambda t1, s1, t2, s2: (np.abs(t1) <= np.abs(t2)) & (s1 <= s2)),
    "r": (score, lambda t1, s1, t2, s2: (t1 <= t2) & (s1 <= s2)),
    "e": (uncertainty, lambda t1, s1, t2, s2: (np.abs(t1) >= np.abs(t2)) & (s1 >= s2)),
    "E_SN": (entropy_normalized, lambda t1, s1, t2, s2: (np.abs(t1) >= np.abs(t2)) & (s1 >= s2)),
}


@pytest.mark.parametrize("name", list(MONOTONE))
def test_c4_monotonicity(name):
    tol, need = 1e-12, 10_000
    measure, hyp = MONOTONE[name]
    rng = np.random.default_rng(SEED)
    a, b = _sample(rng, 6 * need), _sample(rng, 6 * need)
    keep = hyp(a[:, 0] - a[:, 1], a.sum(1), b[:, 0] - b[:, 1], b.sum(1))
    a, b = a[keep], b[keep]
    assert len(a) >= need
    gaps = np.array([measure(make_pair(*x)) - measure(make_pair(*y)) for x, y in zip(a, b)])
    worst = int(np.argmax(gaps))
    dev = max(float(gaps[worst]), 0.0)
    ok = dev <= tol
    detail = f"property 4 for {name} on {len(a)} pairs, max violation {dev:.2e} (tol {tol:g})"
    if not ok:
        detail += f"; e.g. p1={tuple(round(float(x), 4) for x in a[worst])} p2={tuple(round(float(x), 4) for x in b[worst])}"
    record(f"4[{name}]", ok, detail)
    assert ok, detail


def test_c5_partials_vs_finite_differences():
    tol, n, h = 1e-5, 1000, Decimal("1e-6")
    rng = np.random.default_rng(SEED)
    pts = []
    while len(pts) < n:
        mu, nu = _sample(rng, 1)[0]
        p = make_pair(mu, nu)
        a, pi = abs(net_truth(p)), incompleteness(p)
        if min(a, pi, 1 - a - pi) >= 2e-6:
            pts.append(p)
    worst, sign_ok = 0.0, True
    for p in pts:
        d = entropy_partials(p)
        sign_ok &= d.d_abs_tau <= 0 <= d.d_pi
        with decimal.localcontext(CTX):
            a, pi = Decimal(abs(net_truth(p))), Decimal(incompleteness(p))
            fd_a = (entropy_tau_pi_hp(a + h, pi) - entropy_tau_pi_hp(a - h, pi)) / (2 * h)
            fd_p = (entropy_tau_pi_hp(a, pi + h) - entropy_tau_pi_hp(a, pi - h)) / (2 * h)
        worst = max(
            worst,
            abs(float(fd_a) - d.d_abs_tau) / abs(d.d_abs_tau),
            abs(float(fd_p) - d.d_pi) / abs(d.d_pi),
        )
    ok = worst <= tol and sign_ok
    record("5", ok, f"partials vs central FD on {n} points, max rel err {worst:.2e} (tol {tol:g}), signs {'ok' if sign_ok else 'WRONG'}")
    assert ok


def test_c6_decomposition_and_jensen():
    tol = 1e-12
    parts = [entropy_decomposition(p) for p in GRID]
    dev_sum = max(abs(b.fuzziness + b.incompleteness_part - b.normalized) for b in parts)
    dev_jensen = max(0.0, max(b.fuzziness - jensen_bound(p) for b, p in zip(parts, GRID)))
    e_a = np.array([b.fuzziness for b in parts])
    e_u = np.array([b.incompleteness_part for b in parts])
    arg_a, arg_u = GRID[int(np.argmax(e_a))], GRID[int(np.argmax(e_u))]
    ok = (
        dev_sum <= tol
        and dev_jensen <= tol
        and tuple(arg_a) == (0.5, 0.5)
        and tuple(arg_u) == (0.0, 0.0)
    )
    record("6", ok, f"E_A+E_U=E_SN dev {dev_sum:.2e}, Jensen violation {dev_jensen:.2e} (tol {tol:g}); argmax E_A {tuple(arg_a)}, E_U {tuple(arg_u)}")
    assert ok


def test_c7_distance_contract():
    sub = triangle_grid(0.05)
    bounds_ok = all(0 <= distance(p, q) <= 1 for p in sub for q in sub)
    sym_ok = all(distance(p, q) == distance(q, p) for p in sub for q in sub)
    ident_ok = all(distance(p, p) == 0 for p in GRID)
    ratio_dev = max(abs(distance(p, q) - distance_ratio_form(p, q)) for p in sub for q in sub)
    cert_dev = max(abs(certainty(p) - distance(p, complement(p))) for p in GRID)
    witness = find_triangle_violation(0.25)
    P, Q, R = witness
    exact = [(F(x.mu), F(x.nu)) for x in witness]
    witness_ok = (
        [tuple(x) for x in witness] == [(0.0, 0.25), (0.0, 0.0), (0.25, 0.0)]
        and d_exact(exact[0], exact[2]) > d_exact(exact[0], exact[1]) + d_exact(exact[1], exact[2])
    )
    ok = bounds_ok and sym_ok and ident_ok and ratio_dev <= 1e-12 and cert_dev <= 1e-15 and witness_ok
    record(
        "7", ok,
        f"D bounds/symmetry/identity {bounds_ok and sym_ok and ident_ok}; ratio-form dev {ratio_dev:.2e} (tol 1e-12); "
        f"g vs D(p, complement) dev {cert_dev:.2e} (tol 1e-15); witness P={tuple(P)} Q={tuple(Q)} R={tuple(R)}",
    )
    assert ok


def test_c8_coordinate_roundtrip():
    tol = 1e-12
    dev = 0.0
    for p in GRID:
        s = to_secondary(p)
        back = from_secondary(s)
        again = to_secondary(from_secondary(SecondaryPair(s.tau, s.pi)))
        dev = max(dev, abs(back.mu - p.mu), abs(back.nu - p.nu), abs(again.tau - s.tau), abs(again.pi - s.pi))
    ok = dev <= tol
    record("8", ok, f"coordinate round trip on grid, max dev {dev:.2e} (tol {tol:g})")
    assert ok


def test_c9a_verify_exits_zero(capsys):
    code = main(["verify"])
    out = capsys.readouterr().out
    failed = [line.split()[1] for line in out.splitlines() if line.startswith("FAIL")]
    ok = code == 0
    record("9a", ok, f"`verify` default seed exit status {code}" + (f"; failing: {', '.join(failed)}" if failed else ""))
    assert ok, out


def test_c9b_sweep_half_step(capsys):
    code = main(["sweep", "--step", "0.5"])
    lines = capsys.readouterr().out.splitlines()
    ok = code == 0 and len(lines) - 1 == 6
    record("9b", ok, f"`sweep --step 0.5` emitted {len(lines) - 1} rows")
    assert ok


def test_c9c_measure_fixture(capsys, tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text("id,mu,nu\nhalf,0.5,0.5\ntrue,1,0\nfalse,0,1\n")
    code = main(["measure", "--input", str(path)])
    rows = {r["id"]: r for r in csv.DictReader(capsys.readouterr().out.splitlines())}
    expected = {
        "half": {"g": "0", "r": "0", "e": "1", "E_SN": "1"},
        "true": {"g": "1", "r": "1", "e": "0", "E_SN": "0"},
        "false": {"g": "1", "r": "-1", "e": "0", "E_SN": "0"},
    }
    got = {k: {m: rows[k][m] for m in expected[k]} for k in expected}
    ok = code == 0 and got == expected
    record("9c", ok, f"`measure` 3-row fixture reproduces criterion-1 values: {got}")
    assert ok
