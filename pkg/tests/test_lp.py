from fractions import Fraction

import pytest
from hypothesis import given, settings

from cliquecore import (
    LinearProgram,
    build_clique_cover_lp,
    build_stable_set_lp,
    is_integral,
    lp_format,
    maximal_cliques,
    paley3x3,
    solve_dual,
    solve_general,
    solve_primal,
)

import _bruteforce as bf
from conftest import graphs

F = Fraction


def lp(direction, objective, rows, senses, rhs):
    return LinearProgram(
        direction=direction,
        objective=tuple(F(c) for c in objective),
        rows=tuple({j: F(a) for j, a in row.items()} for row in rows),
        senses=tuple(senses),
        rhs=tuple(F(b) for b in rhs),
    )


class TestSolveGeneral:
    def test_single_upper_bound(self):
        res = solve_general(lp("max", [1], [{0: 1}], ["<="], [1]))
        assert res.status == "optimal"
        assert res.value == 1
        assert res.x == (F(1),)

    def test_single_lower_bound_min(self):
        res = solve_general(lp("min", [1], [{0: 1}], [">="], [3]))
        assert res.status == "optimal"
        assert res.value == 3

    def test_equality_row(self):
        res = solve_general(lp("max", [2, 1], [{0: 1, 1: 1}], ["="], [4]))
        assert res.value == 8
        assert res.x == (F(4), F(0))

    def test_infeasible(self):
        res = solve_general(
            lp("max", [1], [{0: 1}, {0: 1}], ["<=", ">="], [1, 2])
        )
        assert res.status == "infeasible"

    def test_unbounded(self):
        res = solve_general(lp("max", [1], [], [], []))
        assert res.status == "unbounded"

    def test_negative_rhs_normalization(self):
        # x >= -1 is vacuous for x >= 0
        res = solve_general(lp("max", [1], [{0: -1}, {0: 1}], ["<=", "<="], [1, 5]))
        assert res.value == 5

    def test_zero_variables(self):
        res = solve_general(lp("max", [], [], [], []))
        assert res.status == "optimal"
        assert res.value == 0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve_general(lp("max", [1], [{1: 1}], ["<="], [1]))

    def test_exact_fractions_no_float(self):
        res = solve_general(
            lp("max", [1, 1], [{0: 3, 1: 1}, {0: 1, 1: 3}], ["<=", "<="], [1, 1])
        )
        assert res.value == F(1, 2)
        assert res.x == (F(1, 4), F(1, 4))

    def test_degenerate_lp_terminates(self):
        # many redundant rows through the same vertex; Bland must not cycle
        rows = [{0: 1, 1: 1}, {0: 1, 1: 1}, {0: 2, 1: 2}, {0: 1}, {1: 1}]
        res = solve_general(
            lp("max", [1, 1], rows, ["<="] * 5, [1, 1, 2, 1, 1])
        )
        assert res.value == 1

    def test_stable_set_lp_on_c5_edge_cliques(self, c5):
        cs = maximal_cliques(c5)
        res = solve_general(build_stable_set_lp(c5.weights, cs.cliques))
        assert res.value == F(5, 2)


class TestGameLPs:
    def test_k3_weighted_primal(self):
        from cliquecore import WeightedGraph

        g = WeightedGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)], [1, 2, 3])
        cs = maximal_cliques(g)
        sol = solve_primal(g, cs)
        assert sol.value == 3
        assert sol.x == (F(0), F(0), F(1))

    def test_k3_weighted_dual(self):
        from cliquecore import WeightedGraph

        g = WeightedGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)], [1, 2, 3])
        cs = maximal_cliques(g)
        sol = solve_dual(g, cs)
        assert sol.y == (F(3),)
        assert sol.value == 3

    def test_c5_primal_all_halves(self, c5):
        # the five tight edge rows force x = 1/2 everywhere; optimum unique
        sol = solve_primal(c5, maximal_cliques(c5))
        assert sol.value == F(5, 2)
        assert sol.x == (F(1, 2),) * 5

    def test_paley_value_three(self):
        g = paley3x3()
        cs = maximal_cliques(g)
        assert solve_primal(g, cs).value == 3
        assert solve_dual(g, cs).value == 3

    def test_path_dual_unique_optimum(self, path3):
        # cover demands: y_ab >= 1, y_ab + y_bc >= 1, y_bc >= 1; min total = 2
        cs = maximal_cliques(path3)
        sol = solve_dual(path3, cs)
        assert cs.cliques == ((0, 1), (1, 2))
        assert sol.y == (F(1), F(1))
        assert sol.value == 2

    def test_determinism(self, paley):
        cs = maximal_cliques(paley)
        assert solve_dual(paley, cs) == solve_dual(paley, cs)
        assert solve_primal(paley, cs) == solve_primal(paley, cs)

    @given(graphs(max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_strong_duality_and_feasibility(self, g):
        if g.n == 0:
            return
        cs = maximal_cliques(g)
        primal = solve_primal(g, cs)
        dual = solve_dual(g, cs)
        assert primal.value == dual.value
        # primal feasibility: every clique row at most one
        for q in cs.cliques:
            assert sum((primal.x[v] for v in q), F(0)) <= 1
        assert all(x >= 0 for x in primal.x)
        # dual feasibility: every vertex demand covered
        for v in range(g.n):
            covered = sum((dual.y[c] for c in cs.member_index[v]), F(0))
            assert covered >= g.weights[v]
        assert all(y >= 0 for y in dual.y)

    @given(graphs(max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_complementary_slackness(self, g):
        if g.n == 0:
            return
        cs = maximal_cliques(g)
        primal = solve_primal(g, cs)
        dual = solve_dual(g, cs)
        for cid, q in enumerate(cs.cliques):
            if dual.y[cid] > 0:
                assert sum((primal.x[v] for v in q), F(0)) == 1
        for v in range(g.n):
            if primal.x[v] > 0:
                covered = sum((dual.y[c] for c in cs.member_index[v]), F(0))
                assert covered == g.weights[v]

    @given(graphs(max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_primal_value_at_least_integral_optimum(self, g):
        if g.n == 0:
            return
        cs = maximal_cliques(g)
        assert solve_primal(g, cs).value >= bf.max_stable_value(g)


class TestIsIntegral:
    def test_integral_vector(self):
        assert is_integral([F(1), F(1), F(1), F(0), F(0), F(0)])

    def test_half_integral_vector(self):
        assert not is_integral([F(1, 2)] * 5)

    def test_paley_dual_vertex_is_integral(self):
        g = paley3x3()
        sol = solve_dual(g, maximal_cliques(g))
        assert is_integral(sol)

    def test_works_on_solutions(self, c5):
        assert not is_integral(solve_primal(c5, maximal_cliques(c5)))


class TestLpFormat:
    def test_sections_and_scaling(self):
        problem = lp("min", [1, 1], [{0: 1, 1: 1}], [">="], [F(5, 2)])
        text = lp_format(problem, "cover")
        assert "Minimize" in text and "Subject To" in text and "End" in text
        # the 5/2 row is scaled to integers
        assert "2 x0 + 2 x1 >= 5" in text

    def test_fractional_objective_notes_scaling(self):
        problem = lp("max", [F(1, 3), 1], [{0: 1}], ["<="], [1])
        text = lp_format(problem)
        assert "objective scaled by 3" in text
        assert "x0 + 3 x1" in text

    def test_builders_roundtrip_through_format(self, paley):
        cs = maximal_cliques(paley)
        text = lp_format(build_clique_cover_lp(paley.weights, cs.cliques))
        assert text.count(">=") == 9
