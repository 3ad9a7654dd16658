from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grooming.bounds import (
    BoundReport,
    GroomingInstance,
    MValue,
    bound_report,
    ceil_div,
    check_monotonicity,
    degree2_exact_A,
    elementary_value,
    general_lower_bound_M,
    greedy_upper_bound_A,
    known_M,
    known_M_table,
)
from grooming.solver import worst_case_A


def test_ceil_div_is_exact():
    for a in range(0, 50):
        for b in range(1, 9):
            assert ceil_div(a, b) == -(-a // b) == (a + b - 1) // b


def test_instance_validation():
    with pytest.raises(ValueError):
        GroomingInstance(0, 1, 1)
    with pytest.raises(ValueError):
        GroomingInstance(3, 0, 1)
    with pytest.raises(ValueError):
        GroomingInstance(3, 1, -1)


def test_report_validation():
    with pytest.raises(ValueError):
        BoundReport(5, 4)
    with pytest.raises(ValueError):
        BoundReport(3, 5, exact=6)


@pytest.mark.parametrize(
    "inst, expected",
    [((7, 5, 1), 7), ((6, 1, 3), 18), ((4, 6, 3), 4), ((5, 2, 0), 0), ((8, 3, 3), None)],
)
def test_elementary_values(inst, expected):
    assert elementary_value(GroomingInstance(*inst)) == expected


@pytest.mark.parametrize("C, d, expected", [(3, 4, 3), (5, 5, 3), (4, 8, 5), (1, 3, 3), (2, 2, 2)])
def test_general_lower_bound(C, d, expected):
    assert general_lower_bound_M(C, d) == expected


@pytest.mark.parametrize("inst, expected", [((4, 6, 3), 4), ((10, 3, 3), 50), ((1, 1, 0), 0)])
def test_greedy_upper_bound(inst, expected):
    assert greedy_upper_bound_A(GroomingInstance(*inst)) == expected


@given(st.integers(1, 8), st.integers(1, 8))
def test_lower_bound_at_least_half_delta(C, d):
    assert general_lower_bound_M(C, d) >= ceil_div(d, 2)
    assert general_lower_bound_M(C, d) <= d


class TestKnownM:
    def test_examples(self):
        assert known_M(3, 3).exact == 3
        assert known_M(7, 3).exact == 2
        v = known_M(4, 3)
        assert (v.lo, v.hi, v.conjectured, v.exact) == (2, 3, 2, None)

    def test_columns(self):
        assert all(known_M(C, 1).exact == 1 for C in range(1, 9))
        assert all(known_M(C, 2).exact == 2 for C in range(1, 9))
        assert all(known_M(C, d).exact == d for C in (1, 2) for d in range(1, 9))

    @given(st.integers(1, 8), st.integers(1, 8))
    def test_intervals_contain_the_general_bounds(self, C, d):
        v = known_M(C, d)
        assert general_lower_bound_M(C, d) <= v.lo <= v.hi <= d
        assert v.provenance

    def test_open_cells_use_the_general_bound(self):
        v = known_M(5, 6)
        assert (v.lo, v.hi) == (4, 6)


class TestMonotonicity:
    def test_table_is_consistent(self):
        assert check_monotonicity(known_M_table(range(1, 9), range(1, 9))) == []
        assert check_monotonicity({(C, 3): known_M(C, 3) for C in range(3, 7)}) == []

    def test_constant_row(self):
        assert check_monotonicity({(C, 2): 2 for C in range(1, 6)}) == []

    def test_drop_by_two_with_large_C(self):
        out = check_monotonicity({(4, 3): 3, (5, 3): 1})
        assert len(out) == 1 and "C > delta" in out[0]

    def test_drop_rule_not_applied_when_C_at_most_delta(self):
        assert check_monotonicity({(3, 3): 3, (4, 3): 1}) == []

    def test_growth_in_C_is_flagged(self):
        assert len(check_monotonicity({(3, 3): 2, (4, 3): 3})) == 1

    def test_decrease_in_delta_is_flagged(self):
        assert len(check_monotonicity({(3, 3): 3, (3, 4): 2})) == 1

    def test_intervals_only_flag_definite_violations(self):
        assert check_monotonicity({(4, 3): MValue(2, 3), (5, 3): 2, (3, 3): 3}) == []


class TestDegreeTwo:
    @pytest.mark.parametrize("n, C, expected", [(8, 3, 14), (5, 2, 9), (6, 3, 10)])
    def test_formula(self, n, C, expected):
        assert degree2_exact_A(n, C) == expected

    def test_C_at_least_n_is_one_part(self):
        assert degree2_exact_A(4, 4) == 4
        assert degree2_exact_A(3, 7) == 3

    @pytest.mark.parametrize("n", range(2, 8))
    def test_matches_exact_solver_for_small_C(self, n):
        for C in range(2, min(3, n) + 1):
            assert degree2_exact_A(n, C) == worst_case_A(n, C, 2).optimum

    @given(st.integers(2, 30), st.integers(2, 30))
    def test_within_general_bounds(self, n, C):
        inst = GroomingInstance(n, C, 2)
        assert n <= degree2_exact_A(n, C) <= min(greedy_upper_bound_A(inst), 2 * n)

    def test_bound_report(self):
        r = bound_report(GroomingInstance(8, 3, 2))
        assert r.exact == r.lower == r.upper == 14
        r = bound_report(GroomingInstance(8, 3, 3))
        assert r.exact is None and r.lower == 8 and r.upper == 24
