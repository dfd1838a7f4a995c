"""Closed-form counts, series solvers, and their three-way agreement."""

from itertools import permutations

from peakmod import (
    FamilySpec,
    TruncSeries,
    count_ballot_joint,
    count_joint,
    count_marginal,
    count_pk,
    fuss_catalan,
    gen_ballot,
    gen_k_dyck,
    gen_kac,
    histogram,
    lagrange_coefficient,
    narayana,
    solve_f,
    solve_f_kac,
    solve_g,
    solve_g_kac,
    stat_vector,
)
from peakmod.statistics import PLAIN, PLAIN_STARRED, WEAK, WEAK_STARRED

from conftest import MOTZKIN, SCHROEDER


def _vectors(total, slots):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _vectors(total - first, slots - 1):
            yield (first,) + rest


class TestCountJoint:
    def test_figure_values(self):
        assert count_joint(2, 3, (0, 1, 1)) == 3
        assert count_joint(2, 3, (2, 0, 0)) == 1

    def test_dyck_value(self):
        # brute force over the 14 Dyck paths of semilength 4
        brute = sum(1 for p in gen_k_dyck(1, 4)
                    if stat_vector(p).key() == (1, 2))
        assert brute == 6
        assert count_joint(1, 4, (1, 2)) == 6

    def test_wrong_weight_is_zero(self):
        assert count_joint(2, 3, (1, 1, 1)) == 0

    def test_full_agreement(self):
        for k in (1, 2, 3):
            for n in range(1, 5):
                hist = histogram(gen_k_dyck(k, n), PLAIN)
                for r in _vectors(n - 1, k + 1):
                    assert count_joint(k, n, r) == hist.counts.get(r, 0)


class TestMarginals:
    def test_figure_marginals(self):
        assert count_marginal(2, 3, 0) == 5
        assert count_marginal(2, 3, 1) == 6
        assert count_marginal(2, 3, 2) == 1

    def test_reversal(self):
        for k in (1, 2, 3):
            for n in range(1, 6):
                for r in range(n):
                    assert count_marginal(k, n, r) == \
                        count_pk(k, n, n - 1 - r)

    def test_sum_is_family_size(self):
        for k in (1, 2, 3):
            for n in range(1, 6):
                assert sum(count_marginal(k, n, r) for r in range(n)) == \
                    fuss_catalan(k, n)

    def test_pk_counts_total_peaks(self):
        # count_pk(k, n, r) counts paths with r+1 peaks overall
        for k, n in ((1, 5), (2, 4)):
            tally: dict[int, int] = {}
            for p in gen_k_dyck(k, n):
                t = stat_vector(p).total_peaks()
                tally[t] = tally.get(t, 0) + 1
            for r in range(n):
                assert count_pk(k, n, r) == tally.get(r, 0)


class TestNarayana:
    def test_values(self):
        assert narayana(4, 2) == 6
        assert narayana(3, 2) == 3
        for n in range(1, 8):
            assert narayana(n, 1) == 1

    def test_matches_peak_histogram(self):
        for n in range(1, 7):
            tally: dict[int, int] = {}
            for p in gen_k_dyck(1, n):
                t = stat_vector(p).total_peaks() + 1
                tally[t] = tally.get(t, 0) + 1
            for r in range(1, n + 1):
                assert narayana(n, r) == tally.get(r, 0)

    def test_symmetry(self):
        for n in range(1, 11):
            for r in range(1, n + 1):
                assert narayana(n, r) == narayana(n, n + 1 - r)


class TestBallotJoint:
    def test_worked_values(self):
        assert count_ballot_joint(2, 0, 1, 2, (1, 1, 0)) == 3
        assert count_ballot_joint(2, 0, 1, 2, (0, 0, 2)) == 0

    def test_reduces_to_joint_at_height_zero(self):
        # at m = 0 the starred vector shifts the residue-0 slot by one
        for n in range(1, 5):
            for s in _vectors(n, 3):
                if s[0] == 0:
                    continue
                assert count_ballot_joint(2, 0, 0, n, s) == \
                    count_joint(2, n, (s[0] - 1, s[1], s[2]))

    def test_brute_force_agreement(self):
        for k in (1, 2, 3):
            for m in range(4):
                ell, r = divmod(m, k)
                for n in range(1, 4):
                    hist = histogram(gen_ballot(k, m, n), PLAIN_STARRED)
                    for s in _vectors(n, k + 1):
                        assert count_ballot_joint(k, ell, r, n, s) == \
                            hist.counts.get(s, 0), (k, m, n, s)

    def test_down_size_zero(self):
        assert count_ballot_joint(2, 0, 1, 0, (0, 0, 0)) == 1
        assert count_ballot_joint(2, 0, 1, 0, (1, 0, 0)) == 0


class TestLagrange:
    def test_figure_value(self):
        assert lagrange_coefficient(2, 3, (0, 1, 1)) == 3

    def test_smallest(self):
        assert lagrange_coefficient(1, 2, (1, 0)) == 1

    def test_agrees_with_closed_form(self):
        for k in (1, 2):
            for n in range(1, 6):
                for r in _vectors(n - 1, k + 1):
                    assert lagrange_coefficient(k, n, r) == \
                        count_joint(k, n, r)


class TestSolveF:
    def test_first_coefficients(self):
        f = solve_f(2, 3)
        assert f.coefficient(0) == {}
        assert f.coefficient(1) == {(0, 0, 0): 1}
        assert f.coefficient(3) == {
            (2, 0, 0): 1, (1, 1, 0): 3, (1, 0, 1): 3,
            (0, 2, 0): 1, (0, 1, 1): 3, (0, 0, 2): 1}

    def test_matches_enumeration(self):
        for k in (1, 2):
            f = solve_f(k, 5)
            for n in range(1, 6):
                hist = histogram(gen_k_dyck(k, n), PLAIN)
                assert f.coefficient(n) == hist.counts

    def test_marker_symmetry(self):
        for k in (1, 2, 3):
            f = solve_f(k, 4)
            for sigma in permutations(range(k + 1)):
                assert f.permute_markers(sigma) == f

    def test_fuss_catalan_at_ones(self):
        for k in (1, 2, 3):
            f = solve_f(k, 5)
            assert f.at_ones() == [fuss_catalan(k, n) if n else 0
                                   for n in range(6)]

    def test_specializations_reproduce_marginals(self):
        k, order = 2, 5
        f = solve_f(k, order)
        for n in range(1, order + 1):
            by_first: dict[int, int] = {}
            by_dd: dict[int, int] = {}
            for key, c in f.coefficient(n).items():
                by_first[key[0]] = by_first.get(key[0], 0) + c
                by_dd[key[k]] = by_dd.get(key[k], 0) + c
            for r in range(n):
                assert by_first.get(r, 0) == count_marginal(k, n, r)
                assert by_dd.get(r, 0) == count_marginal(k, n, r)
                # total peaks n-1-dd, so the dd marginal read backwards
                # reproduces the peak-count formula
                assert by_dd.get(n - 1 - r, 0) == count_pk(k, n, r)


class TestSolveFKac:
    def test_motzkin_tallies(self):
        f = solve_f_kac(MOTZKIN, 5)
        assert f.coefficient(0) == {}
        assert f.coefficient(1) == {(0, 0): 1}
        assert f.coefficient(5) == {
            (0, 0): 2, (0, 1): 5, (1, 0): 5,
            (1, 1): 7, (2, 0): 1, (0, 2): 1}

    def test_schroeder_small(self):
        f = solve_f_kac(SCHROEDER, 4)
        assert f.coefficient(2) == {(0, 0): 2}

    def test_matches_enumeration(self):
        for spec in (MOTZKIN, SCHROEDER):
            f = solve_f_kac(spec, 8)
            for L in range(1, 9):
                hist = histogram(gen_kac(spec, L), WEAK)
                assert f.coefficient(L) == hist.counts

    def test_symmetry(self):
        for spec in (MOTZKIN, SCHROEDER, FamilySpec(2, {1: 2})):
            f = solve_f_kac(spec, 6)
            for sigma in permutations(range(spec.k + 1)):
                assert f.permute_markers(sigma) == f

    def test_level_free_spec_reindexes_solve_f(self):
        # with no level steps the length equation counts by (k+1) * n
        k, order = 2, 9
        by_length = solve_f_kac(FamilySpec(k), order)
        by_size = solve_f(k, order // (k + 1))
        for L in range(order + 1):
            if L % (k + 1) == 0 and L > 0:
                assert by_length.coefficient(L) == \
                    by_size.coefficient(L // (k + 1))
            else:
                assert by_length.coefficient(L) == {}


class TestSolveG:
    def test_height_zero_shifts_residue_zero(self):
        k = 2
        g = solve_g(k, 0, 4)
        for n in range(5):
            hist = histogram(gen_ballot(k, 0, n), PLAIN_STARRED)
            assert g.coefficient(n) == hist.counts

    def test_seven_paths(self):
        g = solve_g(2, 1, 2)
        assert sum(g.coefficient(2).values()) == 7

    def test_symmetry_at_m1(self):
        g = solve_g(2, 1, 4)
        assert g.permute_markers((1, 0, 2)) == g

    def test_matches_enumeration(self):
        for k in (1, 2):
            for m in range(4):
                g = solve_g(k, m, 4)
                for n in range(5):
                    hist = histogram(gen_ballot(k, m, n), PLAIN_STARRED)
                    assert g.coefficient(n) == hist.counts, (k, m, n)


class TestThreeWayAgreement:
    def test_series_equals_ballot_closed_form_directly(self):
        # the functional-equation route and the closed formula agree
        # without passing through enumeration
        for k in (1, 2, 3):
            for m in range(4):
                ell, r = divmod(m, k)
                g = solve_g(k, m, 4)
                for n in range(1, 5):
                    coeff = g.coefficient(n)
                    for s in _vectors(n, k + 1):
                        assert coeff.get(s, 0) == \
                            count_ballot_joint(k, ell, r, n, s), (k, m, n, s)

    def test_series_equals_joint_closed_form_directly(self):
        for k in (1, 2, 3):
            f = solve_f(k, 5)
            for n in range(1, 6):
                coeff = f.coefficient(n)
                for rv in _vectors(n - 1, k + 1):
                    assert coeff.get(rv, 0) == count_joint(k, n, rv)


class TestSolveGKac:
    def test_matches_enumeration(self):
        for k in (1, 2):
            base = FamilySpec(k, {1: 1})
            for m in range(3):
                g = solve_g_kac(base, m, 6)
                spec = FamilySpec(k, {1: 1}, end_height=m)
                for L in range(7):
                    hist = histogram(gen_kac(spec, L), WEAK_STARRED)
                    assert g.coefficient(L) == hist.counts, (k, m, L)

    def test_length_prefactor(self):
        g = solve_g_kac(MOTZKIN, 2, 5)
        assert g.coefficient(0) == {} and g.coefficient(1) == {}
        assert g.coefficient(2) == {(0, 0): 1}


class TestTruncSeries:
    def test_dump_format(self):
        lines = solve_f(2, 3).dump_lines()
        assert lines[0] == "x^0: 0"
        assert lines[1] == "x^1: 1"
        assert lines[2] == "x^2: 1*q0 + 1*q1 + 1*q2"
        assert lines[3] == ("x^3: 1*q0^2 + 3*q0*q1 + 3*q0*q2 "
                            "+ 1*q1^2 + 3*q1*q2 + 1*q2^2")

    def test_json_round_numbers(self):
        doc = solve_f(1, 2).to_json()
        assert doc["order"] == 2 and doc["markers"] == 2
        assert doc["coefficients"][2]["terms"] == [
            {"exponents": [1, 0], "coefficient": 1},
            {"exponents": [0, 1], "coefficient": 1}]

    def test_arithmetic(self):
        one = TruncSeries.one(3, 2)
        x = TruncSeries.x_power(1, 3, 2)
        sq = x * x
        assert sq.coefficient(2) == {(0, 0): 1}
        assert (x + x).coefficient(1) == {(0, 0): 2}
        assert x.mul_marker(1).coefficient(1) == {(0, 1): 1}
        assert x.pow(3).coefficient(3) == {(0, 0): 1}
        assert (one * x) == x

    def test_all_coefficients_nonnegative(self):
        for series in (solve_f(2, 5), solve_f_kac(MOTZKIN, 6),
                       solve_g(2, 3, 4)):
            for n in range(series.order + 1):
                assert all(c > 0 for c in series.coefficient(n).values())
