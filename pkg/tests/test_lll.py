import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dominator.errors import BudgetExceededError, ParameterError
from dominator.exact import is_ab_dominating
from dominator.graph import generate
from dominator.lll import (Coloring, E_UPPER, LllParams, TABLE1_ROWS,
                           all_good, extract_dominating, failure_prob,
                           failure_prob_fixed_color, is_good_at,
                           lll_condition, minimal_colors, moser_tardos,
                           report_rows, report_to_record,
                           smallest_regular_degree)

# bound column of the published table, keyed by (delta, Delta, a, b)
TABLE1_BOUNDS = {
    (7, 7, 2, 2): Fraction(3, 4), (7, 8, 2, 2): Fraction(3, 4),
    (9, 9, 2, 2): Fraction(2, 3), (9, 10, 2, 2): Fraction(2, 3),
    (9, 11, 2, 2): Fraction(2, 3), (14, 14, 2, 2): Fraction(1, 2),
    (8, 8, 1, 2): Fraction(2, 3), (8, 9, 1, 2): Fraction(2, 3),
    (8, 10, 1, 2): Fraction(2, 3), (8, 11, 1, 2): Fraction(2, 3),
    (13, 13, 1, 2): Fraction(1, 2), (13, 14, 1, 2): Fraction(1, 2),
    (8, 8, 2, 1): Fraction(2, 3), (13, 13, 2, 1): Fraction(1, 2),
    (13, 14, 2, 1): Fraction(1, 2),
}


class TestFailureProb:
    def test_delta7_n4(self):
        # both inner sums are 1 + 7*3 = 22; total 4*22 / 4^7
        assert failure_prob(7, 4, 2, 2) == Fraction(88, 16384)

    def test_delta13_n2(self):
        # b-term 1+13 = 14, a-term (N-1)*1 = 1
        assert failure_prob(13, 2, 1, 2) == Fraction(15, 8192)

    def test_degenerate_all_bad(self):
        assert failure_prob(1, 2, 1, 1) == 1

    def test_denominator_power_of_n(self):
        for delta, N, a, b in [(7, 4, 2, 2), (9, 3, 2, 2), (14, 2, 2, 2)]:
            p = failure_prob(delta, N, a, b)
            num = p.numerator * N ** delta
            assert num % p.denominator == 0  # denominator divides N^delta

    def test_out_of_range(self):
        with pytest.raises(ParameterError):
            failure_prob(3, 2, 4, 1)
        with pytest.raises(ParameterError):
            failure_prob(3, 1, 1, 1)

    def test_fixed_color_reading_is_union_over_n(self):
        assert failure_prob_fixed_color(7, 4, 2, 2) == \
            failure_prob(7, 4, 2, 2) / 4

    def test_monotone_nonincreasing_in_delta(self):
        for N in (2, 3, 4):
            for a, b in [(1, 1), (1, 2), (2, 2)]:
                prev = None
                for delta in range(max(a, b), 25):
                    p = failure_prob(delta, N, a, b)
                    if prev is not None:
                        assert p <= prev
                    prev = p


class TestCondition:
    def test_table_row_7722(self):
        holds, value = lll_condition(Fraction(88, 16384), 7)
        assert holds
        assert abs(float(value) - 0.71540) < 1e-4

    def test_table_row_13_14(self):
        holds, value = lll_condition(Fraction(15, 8192), 14)
        assert holds
        assert abs(float(value) - 0.97556) < 1e-4

    def test_fails_at_one(self):
        holds, value = lll_condition(Fraction(1), 1)
        assert not holds and value == E_UPPER

    def test_e_upper_really_upper(self):
        assert float(E_UPPER) >= math.e


class TestMinimalColors:
    @pytest.mark.parametrize("row", TABLE1_ROWS)
    def test_table1_reproduction(self, row):
        rep = minimal_colors(LllParams(*row))
        expected = TABLE1_BOUNDS[row]
        assert rep.minimal_N == expected.denominator
        assert rep.bound == expected
        assert rep.condition_value <= 1
        if rep.minimal_N > 2:
            p_prev = failure_prob(row[0], rep.minimal_N - 1, row[2], row[3])
            assert not lll_condition(p_prev, row[1])[0]

    def test_infeasible_params(self):
        rep = minimal_colors(LllParams(3, 3, 4, 4))
        assert rep.minimal_N is None

    def test_none_up_to_nmax(self):
        rep = minimal_colors(LllParams(3, 3, 2, 2), N_max=64)
        assert rep.minimal_N is None

    def test_minimal_n_nondecreasing_in_Delta(self):
        for delta, a, b in [(9, 2, 2), (13, 1, 2), (8, 2, 1)]:
            prev = 0
            for Delta in range(delta, delta + 8):
                rep = minimal_colors(LllParams(delta, Delta, a, b))
                assert rep.minimal_N is not None
                assert rep.minimal_N >= prev
                prev = rep.minimal_N

    def test_record_schema(self):
        rec = report_to_record(minimal_colors(LllParams(7, 7, 2, 2)))
        assert rec["minimal_N"] == 4
        assert (rec["bound_num"], rec["bound_den"]) == (3, 4)
        assert (rec["P_num"], rec["P_den"]) == (11, 2048)
        digits = rec["condition_value_decimal"].replace(".", "").lstrip("0")
        assert len(digits) == 20

    def test_smallest_regular_degree(self):
        r0 = smallest_regular_degree(2, 2, 2)
        assert r0 == 14  # matches the table's (14,14,2,2) row
        assert lll_condition(failure_prob(r0, 2, 2, 2), r0)[0]
        assert not lll_condition(failure_prob(r0 - 1, 2, 2, 2), r0 - 1)[0]


class TestGoodness:
    def test_c4_mixed_neighborhood(self, c4):
        # vertex 0 sees one neighbor of each color: every removed color
        # leaves it with a dominated neighborhood
        c = Coloring((0, 1, 0, 0), 2)
        assert is_good_at(c4, c, 0, 1, 1)

    def test_c4_alternating_fails_union_reading(self, c4):
        # with colors (0,1,0,1) both neighbors of vertex 0 are color 1;
        # removing color 1 would strand it, so goodness must reject this
        c = Coloring((0, 1, 0, 1), 2)
        assert not is_good_at(c4, c, 0, 1, 1)

    def test_c4_monochromatic(self, c4):
        c = Coloring((0, 0, 0, 0), 2)
        assert not is_good_at(c4, c, 0, 1, 1)

    def test_k4_worked_case(self, k4):
        # v=1 with colors (0,1,1,1): one differently-colored neighbor
        # satisfies b=1, and two neighbors avoid color 0, satisfying a=2
        c = Coloring((0, 1, 1, 1), 2)
        assert is_good_at(k4, c, 1, 2, 1)

    def test_good_everywhere_every_class_complement_dominates(self):
        g = generate("random_regular", n=60, r=7, seed=5)
        run = moser_tardos(g, 4, 2, 2, seed=11)
        assert all_good(g, run.coloring, 2, 2)
        for x in range(4):
            S = {v for v in range(g.n) if run.coloring.colors[v] != x}
            assert is_ab_dominating(g, S, 2, 2)


class TestMoserTardos:
    def test_reproducible(self):
        g = generate("random_regular", n=80, r=7, seed=1)
        r1 = moser_tardos(g, 4, 2, 2, seed=2)
        r2 = moser_tardos(g, 4, 2, 2, seed=2)
        assert r1.coloring == r2.coloring
        assert r1.resamples == r2.resamples

    def test_table_backed_run(self):
        g = generate("random_regular", n=100, r=7, seed=1)
        run = moser_tardos(g, 4, 2, 2, seed=2)
        assert all_good(g, run.coloring, 2, 2)
        assert run.resamples <= 50 * g.n

    def test_14_regular_two_colors(self):
        g = generate("random_regular", n=200, r=14, seed=1)
        run = moser_tardos(g, 2, 2, 2, seed=3)
        assert all_good(g, run.coloring, 2, 2)

    def test_heawood_two_colors_budget(self, heawood):
        # delta=3 cannot host 2 same- and 2 differently-colored neighbors
        with pytest.raises(BudgetExceededError) as exc:
            moser_tardos(heawood, 2, 2, 2, seed=5, max_resamples=200)
        assert exc.value.detail >= 1

    def test_empirical_termination(self):
        counts = []
        g = generate("random_regular", n=100, r=7, seed=1)
        for seed in range(20):
            run = moser_tardos(g, 4, 2, 2, seed=seed)
            counts.append(run.resamples)
        assert max(counts) < 50 * g.n


class TestExtract:
    def test_c4_extraction(self, c4):
        # (0,0,1,1) is good everywhere; removing either class leaves a
        # dominating pair, ties drop the smaller color index
        c = Coloring((0, 0, 1, 1), 2)
        assert all(is_good_at(c4, c, v, 1, 1) for v in range(4))
        cert = extract_dominating(c4, c, 1, 1)
        assert cert.S == frozenset({2, 3})
        assert cert.verified

    def test_not_good_rejected(self, c4):
        with pytest.raises(ParameterError):
            extract_dominating(c4, Coloring((0, 0, 0, 0), 2), 1, 1)

    def test_pigeonhole_bound(self):
        g = generate("random_regular", n=100, r=7, seed=1)
        run = moser_tardos(g, 4, 2, 2, seed=9)
        cert = extract_dominating(g, run.coloring, 2, 2)
        assert cert.verified and len(cert.S) <= 75


@settings(max_examples=120, deadline=None)
@given(delta=st.integers(1, 20), N=st.integers(2, 8),
       a=st.integers(1, 4), b=st.integers(1, 4))
def test_failure_prob_is_probability_sum(delta, N, a, b):
    if a > delta or b > delta:
        return
    p = failure_prob(delta, N, a, b)
    assert 0 < p <= 1
