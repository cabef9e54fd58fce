from fractions import Fraction

import pytest
from hypothesis import given, settings

from cliquecore import (
    GuardError,
    WeightedGraph,
    cost,
    four_program_chain,
    max_weight_stable_set,
    maximal_cliques,
    min_integral_clique_cover_value,
    paley3x3,
    subset_cost_table,
)
from cliquecore.graph import scenario_mask

import _bruteforce as bf
from conftest import graphs, random_graph

F = Fraction


class TestMaxWeightStableSet:
    def test_paley_unit_worth_three(self):
        assert max_weight_stable_set(paley3x3()).total_cost == 3

    def test_empty_graph(self):
        res = max_weight_stable_set(WeightedGraph.from_edges(0))
        assert res.members == ()
        assert res.total_cost == 0

    def test_c5_unit(self, c5):
        res = max_weight_stable_set(c5)
        assert res.total_cost == 2  # brute force over all 32 subsets agrees
        assert res.total_cost == bf.max_stable_value(c5)

    @given(graphs())
    @settings(max_examples=80, deadline=None)
    def test_value_matches_exhaustive_scan(self, g):
        res = max_weight_stable_set(g)
        assert res.total_cost == bf.max_stable_value(g)
        assert bf.is_stable(g, res.members)
        assert sum((g.weights[v] for v in res.members), F(0)) == res.total_cost

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_lexicographically_smallest_optimum(self, g):
        res = max_weight_stable_set(g)
        assert res.members == min(bf.best_stable_sets(g))

    def test_zero_weights_give_empty_set(self):
        g = WeightedGraph.from_edges(3, [(0, 1)], [0, 0, 0])
        assert max_weight_stable_set(g).members == ()

    def test_tie_break_prefers_smaller_vertices(self):
        # two disjoint optimal singletons of equal weight
        g = WeightedGraph.from_edges(2, [(0, 1)], [3, 3])
        assert max_weight_stable_set(g).members == (0,)

    def test_guard(self):
        with pytest.raises(GuardError):
            max_weight_stable_set(WeightedGraph.from_edges(31))

    def test_matches_exhaustive_scan_on_corpus(self):
        from cliquecore.corpus import build_corpus

        for inst in build_corpus(30, seed=2025):
            res = max_weight_stable_set(inst.graph)
            assert res.total_cost == bf.max_stable_value(inst.graph)
            assert res.members == min(bf.best_stable_sets(inst.graph))


class TestCost:
    def test_empty_scenario(self, paley):
        assert cost(paley, []) == 0

    def test_paley_row_costs_one(self, paley):
        assert cost(paley, [0, 1, 2]) == 1

    def test_paley_color_class_costs_three(self, paley):
        assert cost(paley, [0, 4, 8]) == 3

    @given(graphs(max_n=6))
    @settings(max_examples=30, deadline=None)
    def test_monotone_under_inclusion(self, g):
        import itertools

        for small in bf.subsets(g.n):
            extras = [v for v in range(g.n) if v not in small]
            for add in itertools.combinations(extras, min(1, len(extras))):
                assert cost(g, small) <= cost(g, small + add)

    def test_matches_subset_table(self):
        g = random_graph(7, seed=19)
        table = subset_cost_table(g)
        for s in bf.subsets(g.n):
            assert table[scenario_mask(s)] == cost(g, s)


class TestIntegralCliqueCover:
    def test_k3(self, k3):
        assert min_integral_clique_cover_value(k3, [1, 1, 1]) == 1

    def test_c5_unit_cover_is_three(self, c5):
        assert min_integral_clique_cover_value(c5) == 3
        assert bf.min_clique_cover_value(c5, [1] * 5) == 3

    def test_paley_unit_cover_is_three(self):
        assert min_integral_clique_cover_value(paley3x3()) == 3

    def test_zero_demand(self, c5):
        assert min_integral_clique_cover_value(c5, [0] * 5) == 0

    def test_rejects_fractional_weights(self, k3):
        with pytest.raises(ValueError, match="integer"):
            min_integral_clique_cover_value(k3, [F(1, 2), 1, 1])

    @given(graphs(max_n=6, max_weight=3))
    @settings(max_examples=40, deadline=None)
    def test_matches_exhaustive_multiplicity_scan(self, g):
        if g.n == 0:
            return
        ours = min_integral_clique_cover_value(g)
        reference = bf.min_clique_cover_value(g, [int(w) for w in g.weights])
        assert ours == (reference or 0)

    def test_weighted_path(self, path3):
        # demands 1,2,1 over cliques {0,1} and {1,2}: one unit each suffices
        assert min_integral_clique_cover_value(path3, [1, 2, 1]) == 2
        assert bf.min_clique_cover_value(path3, [1, 2, 1]) == 2


class TestFourProgramChain:
    def test_k3_all_equal(self, k3):
        r = four_program_chain(k3, [1, 1, 1])
        assert (
            r.integral_primal,
            r.fractional_primal,
            r.fractional_dual,
            r.integral_dual,
        ) == (1, 1, 1, 1)

    def test_c5_exhibits_both_strict_gaps(self, c5):
        r = four_program_chain(c5, [1, 1, 1, 1, 1])
        assert r.integral_primal == 2
        assert r.fractional_primal == F(5, 2)
        assert r.fractional_dual == F(5, 2)
        assert r.integral_dual == 3
        assert not r.gap_closed

    def test_paley_all_ones(self):
        r = four_program_chain(paley3x3(), [1] * 9)
        assert (
            r.integral_primal,
            r.fractional_primal,
            r.fractional_dual,
            r.integral_dual,
        ) == (3, 3, 3, 3)

    def test_rejects_non_binary_weights(self, k3):
        with pytest.raises(ValueError):
            four_program_chain(k3, [2, 0, 0])

    @given(graphs(max_n=7, max_weight=1))
    @settings(max_examples=40, deadline=None)
    def test_chain_inequalities_always_hold(self, g):
        if g.n == 0:
            return
        w01 = [int(w) for w in g.weights]
        r = four_program_chain(g, w01)
        assert r.integral_primal <= r.fractional_primal
        assert r.fractional_primal == r.fractional_dual
        assert r.fractional_dual <= r.integral_dual
        # ends agree with the naive oracles
        assert r.integral_primal == bf.max_stable_value(g, w01)
        assert r.integral_dual == (bf.min_clique_cover_value(g, w01) or 0)


class TestWeakDuality:
    @given(graphs(max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_any_feasible_cover_dominates_any_stable_set(self, g):
        if g.n == 0:
            return
        cs = maximal_cliques(g)
        # feasible cover: for each vertex, dump its full demand on its first clique
        y = [F(0)] * len(cs)
        for v in range(g.n):
            y[cs.member_index[v][0]] += g.weights[v]
        for s in bf.subsets(g.n):
            if bf.is_stable(g, s):
                stable_value = sum((g.weights[v] for v in s), F(0))
                assert sum(y, F(0)) >= stable_value
