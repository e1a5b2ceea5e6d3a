import pytest

from wienerbound import (
    DisconnectedGraphError,
    Graph,
    NotApplicableError,
    diameter_two_wiener,
    evaluate,
    moore_bound,
    moore_diameter_lower_bound,
    off_path_vertex_excess,
    path_pair_excess,
    wiener_index,
    wiener_lower_bound,
    wiener_lower_bound_from_degree,
)
from wienerbound.generators import (
    complete,
    cycle,
    path,
    petersen,
    prism,
    random_connected,
    star,
)

from oracles import off_path_excess_direct, path_excess_direct


class TestPathPairExcess:
    @pytest.mark.parametrize("d,expected", [(0, 0), (1, 0), (2, 0), (3, 1), (5, 10)])
    def test_values(self, d, expected):
        assert path_pair_excess(d) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            path_pair_excess(-1)

    def test_matches_direct_summation(self):
        for d in range(2, 201):
            assert path_pair_excess(d) == path_excess_direct(d)


class TestOffPathVertexExcess:
    @pytest.mark.parametrize(
        "d,expected", [(2, 0), (3, 0), (4, 0), (5, 1), (6, 2), (7, 4)]
    )
    def test_values(self, d, expected):
        assert off_path_vertex_excess(d) == expected

    def test_below_two_rejected(self):
        with pytest.raises(NotApplicableError):
            off_path_vertex_excess(1)

    def test_matches_clamped_summation(self):
        for d in range(3, 202):
            assert off_path_vertex_excess(d) == off_path_excess_direct(d)


class TestWienerLowerBound:
    @pytest.mark.parametrize(
        "n,m,d,expected",
        [
            (10, 15, 2, 75),   # attained by the Petersen graph
            (5, 4, 4, 20),     # attained by the 5-vertex path
            (4, 3, 3, 10),     # attained by the 4-vertex path
            (6, 9, 2, 21),     # attained by the triangular prism
            (11, 15, 3, 96),
        ],
    )
    def test_frozen_values(self, n, m, d, expected):
        assert wiener_lower_bound(n, m, d) == expected

    def test_diameter_one_not_applicable(self):
        with pytest.raises(NotApplicableError, match="d=1"):
            wiener_lower_bound(10, 15, 1)

    def test_order_must_exceed_diameter(self):
        with pytest.raises(ValueError, match="exceed"):
            wiener_lower_bound(4, 3, 4)

    def test_size_range_checked(self):
        with pytest.raises(ValueError, match="connected"):
            wiener_lower_bound(6, 4, 2)
        with pytest.raises(ValueError, match="exceeds"):
            wiener_lower_bound(4, 7, 2)

    def test_small_diameter_cases_reduce(self):
        # d = 2, 3, 4 collapse to n(n-1) - m plus 0, 1, 4
        for n in range(5, 40, 7):
            m = 2 * n
            assert wiener_lower_bound(n, m, 2) == n * (n - 1) - m
            assert wiener_lower_bound(n, m, 3) == n * (n - 1) - m + 1
            assert wiener_lower_bound(n, m, 4) == n * (n - 1) - m + 4

    def test_integrality_everywhere(self):
        # every division in the formula must be remainder-free
        for d in range(2, 120):
            for n in range(d + 1, d + 6):
                assert isinstance(wiener_lower_bound(n, n - 1, d), int)


class TestDiameterTwoWiener:
    def test_petersen_numbers(self):
        assert diameter_two_wiener(10, 15) == 75

    def test_prism_numbers(self):
        assert diameter_two_wiener(6, 9) == 21

    def test_star_symbolic(self):
        # order m+1, size m gives m(m+1) - m = m^2
        for m in range(2, 7):
            assert diameter_two_wiener(m + 1, m) == m * m
            assert wiener_index(star(m)) == m * m


class TestMooreBound:
    @pytest.mark.parametrize("delta,d,n_max", [(3, 2, 10), (2, 3, 7), (4, 2, 17), (3, 1, 4)])
    def test_values(self, delta, d, n_max):
        assert moore_bound(delta, d).n_max == n_max

    def test_degree_below_two_rejected(self):
        with pytest.raises(NotApplicableError):
            moore_bound(1, 3)

    def test_diameter_below_one_rejected(self):
        with pytest.raises(ValueError):
            moore_bound(3, 0)

    def test_geometric_series_agreement(self):
        for delta in range(3, 9):
            for d in range(1, 8):
                closed = 1 + delta * ((delta - 1) ** d - 1) // (delta - 2)
                assert moore_bound(delta, d).n_max == closed


class TestMooreInversion:
    @pytest.mark.parametrize("n,delta,expected", [(10, 3, 2), (11, 3, 3), (5, 2, 2)])
    def test_values(self, n, delta, expected):
        assert moore_diameter_lower_bound(n, delta) == expected

    def test_minimality_small(self):
        for delta in range(2, 9):
            for n in range(2, 400):
                d = moore_diameter_lower_bound(n, delta)
                assert moore_bound(delta, d).n_max >= n
                assert d == 1 or moore_bound(delta, d - 1).n_max < n

    def test_degree_below_two_rejected(self):
        with pytest.raises(NotApplicableError):
            moore_diameter_lower_bound(10, 1)


class TestBoundFromDegree:
    def test_petersen_parameters(self):
        assert wiener_lower_bound_from_degree(10, 15, 3) == 75

    def test_diameter_floor_three(self):
        assert wiener_lower_bound_from_degree(11, 15, 3) == 96

    def test_complete_graph_not_applicable(self):
        with pytest.raises(NotApplicableError, match="complete"):
            wiener_lower_bound_from_degree(4, 6, 3)

    def test_floor_clamped_to_two_when_not_complete(self):
        # Moore admits diameter 1 at n=5, delta=4, but m=8 < 10 forbids
        # completeness, so the bound is evaluated at d=2: 20 - 8 = 12
        assert wiener_lower_bound_from_degree(5, 8, 4) == 12

    def test_never_exceeds_true_bound(self):
        for seed in range(15):
            g = random_connected(12, 0.25, seed=seed)
            report = evaluate(g)
            if not report.applicable:
                continue
            relaxed = wiener_lower_bound_from_degree(g.n, g.m, g.max_degree())
            assert relaxed <= report.wiener


class TestEvaluate:
    def test_path_tight(self):
        report = evaluate(path(5))
        assert report.applicable and report.gap == 0 and report.tight

    def test_petersen_tight(self):
        report = evaluate(petersen())
        assert (report.wiener, report.bound, report.tight) == (75, 75, True)

    def test_cycle_gap(self):
        # W(C6) = 6 + 12 + 9 = 27 against a bound of 25
        report = evaluate(cycle(6))
        assert (report.wiener, report.bound, report.gap, report.tight) == (27, 25, 2, False)

    def test_prism_tight(self):
        report = evaluate(prism())
        assert (report.wiener, report.bound) == (21, 21)

    def test_complete_not_applicable(self):
        report = evaluate(complete(5))
        assert not report.applicable
        assert report.bound is None and report.gap is None and report.tight is None
        assert report.wiener == 10 and report.d == 1

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            evaluate(Graph(4, [(0, 1), (2, 3)]))

    def test_gap_nonnegative_on_random_corpus(self):
        for seed in range(40):
            g = random_connected(4 + seed % 25, (seed % 5) / 5, seed=seed)
            report = evaluate(g)
            if report.applicable:
                assert report.gap >= 0
                assert report.tight == (report.gap == 0)
