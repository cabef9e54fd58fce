"""Exact combinatorial ground truth, independent of the LP solver.

Everything here is search over bitmasks with admissible pruning; nothing
consults the simplex code, so agreement between the two routes (tested
throughout the suite) is meaningful evidence rather than circularity.
In particular the integral clique-cover search never uses the fractional
optimum as a bound: a solver bug must not be able to mask itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import lp
from .cliques import maximal_cliques
from .errors import GuardError
from .graph import WeightedGraph, induced_subgraph, make_scenario

MAX_STABLE_SET_N = 30
MAX_COVER_N = 20
MAX_CHAIN_N = 16
MAX_COST_TABLE_N = 22

ZERO = Fraction(0)


@dataclass(frozen=True)
class StableSetResult:
    """A maximum-cost stable set: sorted members and their total cost."""

    members: tuple[int, ...]
    total_cost: Fraction


@dataclass(frozen=True)
class FourProgramReport:
    """The chain  integral primal <= LP primal = LP dual <= integral dual.

    ``integral_primal`` is the maximum 0/1-weight stable set value,
    ``integral_dual`` the minimum integral clique cover of the weight-1
    vertices; the two LP values are the shared fractional optimum.  The
    weak inequalities and the middle equality hold on every graph; the two
    ends meet exactly on perfect graphs.
    """

    integral_primal: int
    fractional_primal: Fraction
    fractional_dual: Fraction
    integral_dual: int

    @property
    def gap_closed(self) -> bool:
        return self.integral_primal == self.integral_dual


def max_weight_stable_set(g: WeightedGraph) -> StableSetResult:
    """Maximum-cost stable set by branch and bound, exact.

    Ties are broken toward the lexicographically smallest member list, so
    the result is reproducible byte for byte.  The bound is the sum of the
    remaining candidates' weights (admissible).
    """
    if g.n > MAX_STABLE_SET_N:
        raise GuardError(f"stable-set search capped at n <= {MAX_STABLE_SET_N}")
    if g.n == 0:
        return StableSetResult(members=(), total_cost=ZERO)
    adj = g.adj
    w = g.weights

    def weight_of(mask: int) -> Fraction:
        total = ZERO
        v = 0
        while mask:
            if mask & 1:
                total += w[v]
            mask >>= 1
            v += 1
        return total

    # Pass 1: the optimal cost, with aggressive pruning.
    best = ZERO

    def search(cur: Fraction, cand: int):
        nonlocal best
        if cur > best:
            best = cur
        if cand == 0:
            return
        if cur + weight_of(cand) <= best:
            return
        v = (cand & -cand).bit_length() - 1
        search(cur + w[v], cand & ~adj[v] & ~(1 << v))
        search(cur, cand & ~(1 << v))

    search(ZERO, (1 << g.n) - 1)
    target = best

    # Pass 2: first set of cost `target` in lexicographic member order.
    def lex(cur_cost: Fraction, members: list[int], cand: int):
        if cur_cost == target:
            return tuple(members)
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            bit = 1 << v
            rest &= ~bit
            nxt = cand & ~adj[v] & ~(bit | (bit - 1))
            if cur_cost + w[v] + weight_of(nxt) < target:
                continue
            members.append(v)
            hit = lex(cur_cost + w[v], members, nxt)
            if hit is not None:
                return hit
            members.pop()
        return None

    members = lex(ZERO, [], (1 << g.n) - 1)
    if members is None:  # target was produced by pass 1, so this cannot miss
        raise RuntimeError("stable-set tie-break pass failed to reach the optimum")
    return StableSetResult(members=members, total_cost=target)


def cost(g: WeightedGraph, scenario: Iterable[int]) -> Fraction:
    """Cost of the optimal investment in a scenario: the maximum total
    weight of a stable set inside the induced subgraph.  cost(empty) = 0."""
    s = make_scenario(scenario, g.n)
    if not s:
        return ZERO
    sub, _ = induced_subgraph(g, s)
    return max_weight_stable_set(sub).total_cost


def subset_cost_table(g: WeightedGraph) -> list[Fraction]:
    """cost(S) for every vertex subset S, indexed by bitmask.

    Dynamic program over masks: drop the lowest vertex or take it and drop
    its closed neighborhood.  Used by the exhaustive core checker, where
    every one of the 2^n scenarios is consulted.
    """
    if g.n > MAX_COST_TABLE_N:
        raise GuardError(f"subset cost table capped at n <= {MAX_COST_TABLE_N}")
    w = g.weights
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    table = [ZERO] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        v = (mask & -mask).bit_length() - 1
        skip = table[mask & ~(1 << v)]
        take = w[v] + table[mask & ~closed[v]]
        table[mask] = take if take > skip else skip
    return table


def min_integral_clique_cover_value(
    g: WeightedGraph, weights: Sequence[int | Fraction] | None = None
) -> int:
    """Minimum total multiplicity of maximal cliques covering each vertex's
    integral demand: min sum_Q y_Q with y integral >= 0 and
    sum_{Q contains v} y_Q >= w_v.

    Exact depth-first search.  Admissible lower bound: demands summed over
    a greedily chosen stable set (a clique meets a stable set in at most
    one vertex, so those demands can never share a unit).  Multiplicities
    per clique never need to exceed the largest demand.
    """
    if g.n > MAX_COVER_N:
        raise GuardError(f"integral cover search capped at n <= {MAX_COVER_N}")
    if weights is None:
        weights = g.weights
    demand: list[int] = []
    for v, x in enumerate(weights):
        f = Fraction(x)
        if f.denominator != 1:
            raise ValueError(f"integral cover needs integer weights, got {f} at {v}")
        if f < 0:
            raise ValueError(f"negative weight at vertex {v}")
        demand.append(int(f))
    if len(demand) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(demand)}")
    if g.n == 0 or max(demand) == 0:
        return 0

    cs = maximal_cliques(g)
    masks = cs.masks
    containing = cs.member_index
    max_mult = max(demand)
    adj = g.adj

    def stable_set_bound(deficit: list[int]) -> int:
        order = sorted(
            (v for v in range(g.n) if deficit[v] > 0),
            key=lambda v: (-deficit[v], v),
        )
        picked_mask = 0
        bound = 0
        for v in order:
            if adj[v] & picked_mask:
                continue
            picked_mask |= 1 << v
            bound += deficit[v]
        return bound

    # Greedy initial cover: always a valid upper bound.
    deficit = demand[:]
    counts = [0] * len(cs)
    greedy_total = 0
    while True:
        open_mask = 0
        for v in range(g.n):
            if deficit[v] > 0:
                open_mask |= 1 << v
        if open_mask == 0:
            break
        cid = max(range(len(cs)), key=lambda c: ((masks[c] & open_mask).bit_count(), -c))
        counts[cid] += 1
        greedy_total += 1
        for v in cs.cliques[cid]:
            if deficit[v] > 0:
                deficit[v] -= 1
    best = greedy_total

    deficit = demand[:]
    counts = [0] * len(cs)

    def dfs(total: int):
        nonlocal best
        bound = stable_set_bound(deficit)
        if bound == 0:
            if total < best:
                best = total
            return
        if total + bound >= best:
            return
        # Most constrained open vertex: fewest cliques, then smallest id.
        v = min(
            (u for u in range(g.n) if deficit[u] > 0),
            key=lambda u: (len(containing[u]), u),
        )
        dv = deficit[v]

        def distribute(idx: int, remaining: int):
            if remaining == 0:
                dfs(total + dv)
                return
            if idx == len(containing[v]):
                return
            cid = containing[v][idx]
            room = max_mult - counts[cid]
            cap = min(remaining, room)
            # Last clique must absorb the remainder or the branch dies.
            lo = remaining if idx == len(containing[v]) - 1 else 0
            for amount in range(lo, cap + 1):
                if amount:
                    counts[cid] += amount
                    for u in cs.cliques[cid]:
                        deficit[u] -= amount
                distribute(idx + 1, remaining - amount)
                if amount:
                    counts[cid] -= amount
                    for u in cs.cliques[cid]:
                        deficit[u] += amount

        distribute(0, dv)

    dfs(0)
    return best


def four_program_chain(g: WeightedGraph, zero_one_weights: Sequence[int]) -> FourProgramReport:
    """All four optima for a 0/1 cost vector, with the chain checked exactly."""
    if g.n > MAX_CHAIN_N:
        raise GuardError(f"four-program chain capped at n <= {MAX_CHAIN_N}")
    w01 = [int(x) for x in zero_one_weights]
    if len(w01) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w01)}")
    if any(x not in (0, 1) for x in w01):
        raise ValueError("chain weights must be 0 or 1")

    reweighted = g.with_weights(w01)
    ip = max_weight_stable_set(reweighted).total_cost
    cs = maximal_cliques(g)
    fracs = [Fraction(x) for x in w01]
    primal = lp.solve_general(lp.build_stable_set_lp(fracs, cs.cliques))
    dual = lp.solve_general(lp.build_clique_cover_lp(fracs, cs.cliques))
    if primal.status != "optimal" or dual.status != "optimal":
        raise RuntimeError("chain LPs must be solvable")
    id_value = min_integral_clique_cover_value(g, w01)

    report = FourProgramReport(
        integral_primal=int(ip),
        fractional_primal=primal.value,
        fractional_dual=dual.value,
        integral_dual=id_value,
    )
    ok = (
        report.integral_primal <= report.fractional_primal
        and report.fractional_primal == report.fractional_dual
        and report.fractional_dual <= report.integral_dual
    )
    if not ok:
        raise RuntimeError(f"four-program chain violated: {report}")
    return report
