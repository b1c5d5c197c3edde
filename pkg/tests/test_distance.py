import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given

from ifsinfo import (
    CORNER,
    IfsPair,
    compare,
    distance,
    distance_ratio_form,
    find_triangle_violation,
    incompleteness,
    l1_distance,
    make_pair,
    similarity,
    triangle_grid,
)

from helpers import d_exact, pairs

CASES = [
    # (p, q, l1, D) with D from the exact oracle
    ((1.0, 0.0), (0.0, 1.0), 2.0, d_exact((1, 0), (0, 1))),
    ((0.3, 0.4), (0.3, 0.4), 0.0, F(0)),
    ((0.0, 0.0), (1.0, 0.0), 1.0, d_exact((0, 0), (1, 0))),
]


def test_oracle_values():
    assert d_exact((1, 0), (0, 1)) == 1
    assert d_exact((0, 0), (1, 0)) == F(1, 3)


@pytest.mark.parametrize("p, q, l1, d", CASES)
def test_examples(p, q, l1, d):
    p, q = make_pair(*p), make_pair(*q)
    assert l1_distance(p, q) == l1
    assert distance(p, q) == pytest.approx(float(d), abs=1e-15)
    assert similarity(p, q) == pytest.approx(1 - float(d), abs=1e-15)
    res = compare(p, q)
    assert res.l1 == l1 and res.normalized == distance(p, q)
    assert abs(res.similarity - (1.0 - res.normalized)) <= 1e-15


@given(pairs(), pairs())
def test_metric_like_properties(p, q):
    d = distance(p, q)
    assert 0.0 <= d <= 1.0
    assert 0.0 <= l1_distance(p, q) <= 2.0
    assert d == distance(q, p)
    assert distance(p, p) == 0.0
    assert 2.0 + incompleteness(p) + incompleteness(q) >= 2.0


@given(pairs(), pairs())
def test_ratio_form_matches_closed_form(p, q):
    assert abs(distance(p, q) - distance_ratio_form(p, q)) <= 1e-12


@given(pairs(), pairs())
def test_l1_detour_through_corner(p, q):
    detour = (abs(p.mu - CORNER[0]) + abs(p.nu - CORNER[1])) + (
        abs(CORNER[0] - q.mu) + abs(CORNER[1] - q.nu)
    )
    assert detour >= l1_distance(p, q)
    assert detour > 0


def test_corner_is_not_a_valid_pair():
    assert CORNER == (1.0, 1.0)
    with pytest.raises(ValueError):
        IfsPair(*CORNER)


class TestTriangleViolation:
    def test_pinned_witness_step_quarter(self):
        witness = find_triangle_violation(0.25)
        assert witness is not None
        assert [tuple(p) for p in witness] == [(0.0, 0.25), (0.0, 0.0), (0.25, 0.0)]
        # exact check: D(P,R) = 1/7 > D(P,Q) + D(Q,R) = 2/15
        P, Q, R = (0, F(1, 4)), (0, 0), (F(1, 4), 0)
        assert d_exact(P, R) == F(1, 7)
        assert d_exact(P, Q) + d_exact(Q, R) == F(2, 15)
        assert d_exact(P, R) - d_exact(P, Q) - d_exact(Q, R) == F(1, 105)

    def test_witness_is_lexicographically_first(self):
        # brute force with exact arithmetic over the same lattice
        grid = [(F(i, 4), F(j, 4)) for i in range(5) for j in range(5 - i)]
        first = next(
            (a, b, c)
            for a, b, c in itertools.product(grid, repeat=3)
            if d_exact(a, c) > d_exact(a, b) + d_exact(b, c)
        )
        found = find_triangle_violation(0.25)
        assert [tuple(map(F, p)) for p in found] == list(first)

    @pytest.mark.parametrize("step", [0.5, 0.25])
    def test_l1_has_no_violation(self, step):
        assert find_triangle_violation(step, metric=l1_distance) is None

    @pytest.mark.parametrize("step", [0.0, -0.1, 0.75])
    def test_rejects_bad_step(self, step):
        with pytest.raises(ValueError):
            find_triangle_violation(step)

    def test_exact_distance_matches_float_on_grid(self):
        grid = triangle_grid(0.25)
        for p, q in itertools.product(grid, repeat=2):
            exact = d_exact((F(p.mu), F(p.nu)), (F(q.mu), F(q.nu)))
            assert distance(p, q) == pytest.approx(float(exact), abs=1e-15)
