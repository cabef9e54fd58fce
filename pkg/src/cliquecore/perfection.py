"""Deciding perfection of small graphs, with verifiable witnesses.

Two independent routes:

* the structural route searches exhaustively for an induced odd chordless
  cycle of length >= 5 in the graph or in its complement (their absence
  characterizes perfection);
* the definitional route computes clique number and chromatic number for
  every induced subgraph by subset dynamic programming and demands
  equality throughout.

The structural route is the decision procedure; for n <= 10 the
definitional route is run as well and any disagreement raises, so the two
implementations continuously police each other at small scale.  Guards
are honest hard limits: these are exponential procedures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardError
from .graph import WeightedGraph, complement

MAX_PERFECTION_N = 16
MAX_OMEGA_CHI_N = 12
DEFINITIONAL_CHECK_N = 10


@dataclass(frozen=True)
class PerfectionVerdict:
    """Outcome plus, when imperfect, a checkable witness cycle.

    ``hole`` lists the cycle's vertices in traversal order; it is an
    induced chordless odd cycle of length >= 5 in the graph itself or, if
    ``hole_in_complement`` is set, in the complement.
    """

    is_perfect: bool
    hole: tuple[int, ...] | None = None
    hole_in_complement: bool = False

    def to_json_dict(self) -> dict:
        out: dict = {"perfect": self.is_perfect}
        if self.hole is not None:
            out["witness"] = {
                "cycle": list(self.hole),
                "inComplement": self.hole_in_complement,
            }
        else:
            out["witness"] = None
        return out


def find_odd_hole(g: WeightedGraph) -> tuple[int, ...] | None:
    """Smallest-bitmask induced chordless odd cycle of length >= 5, if any.

    Exhaustive over vertex subsets: a subset induces a chordless cycle iff
    every member has exactly two neighbors inside it and the subset is
    connected.  Deterministic: subsets are scanned in ascending bitmask
    order and the cycle is reported starting at its smallest vertex,
    stepping first to the smaller of that vertex's two cycle neighbors.
    """
    if g.n > MAX_PERFECTION_N:
        raise GuardError(f"odd-hole search capped at n <= {MAX_PERFECTION_N}")
    adj = g.adj
    for mask in range(1 << g.n):
        k = mask.bit_count()
        if k < 5 or k % 2 == 0:
            continue
        if not _induces_cycle(adj, mask, k):
            continue
        return _walk_cycle(adj, mask, k)
    return None


def _induces_cycle(adj, mask: int, size: int) -> bool:
    rest = mask
    first = -1
    while rest:
        v = (rest & -rest).bit_length() - 1
        if (adj[v] & mask).bit_count() != 2:
            return False
        if first < 0:
            first = v
        rest &= rest - 1
    # connectivity: walk from the first vertex
    seen = 1 << first
    frontier = 1 << first
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= adj[v] & mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _walk_cycle(adj, mask: int, size: int) -> tuple[int, ...]:
    start = (mask & -mask).bit_length() - 1
    nbrs = adj[start] & mask
    a = (nbrs & -nbrs).bit_length() - 1
    order = [start, a]
    prev, cur = start, a
    while len(order) < size:
        step = adj[cur] & mask & ~(1 << prev)
        nxt = (step & -step).bit_length() - 1
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def is_perfect(g: WeightedGraph) -> PerfectionVerdict:
    """Perfection verdict with witness, double-checked definitionally.

    Perfect iff neither the graph nor its complement contains an induced
    odd chordless cycle of length >= 5.  For n <= 10 the definitional
    clique-number = chromatic-number scan over all induced subgraphs is
    also run; the two procedures must agree or a RuntimeError is raised.
    """
    if g.n > MAX_PERFECTION_N:
        raise GuardError(f"perfection check capped at n <= {MAX_PERFECTION_N}")
    hole = find_odd_hole(g)
    if hole is not None:
        verdict = PerfectionVerdict(is_perfect=False, hole=hole)
    else:
        anti = find_odd_hole(complement(g))
        if anti is not None:
            verdict = PerfectionVerdict(is_perfect=False, hole=anti, hole_in_complement=True)
        else:
            verdict = PerfectionVerdict(is_perfect=True)
    if g.n <= DEFINITIONAL_CHECK_N:
        definitional = _definitionally_perfect(g)
        if definitional != verdict.is_perfect:
            raise RuntimeError(
                "perfection procedures disagree: structural says "
                f"{verdict.is_perfect}, definitional says {definitional}"
            )
    return verdict


def _omega_table(g: WeightedGraph) -> list[int]:
    """Clique number of every induced subgraph, indexed by bitmask."""
    adj = g.adj
    table = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        v = (mask & -mask).bit_length() - 1
        skip = table[mask & ~(1 << v)]
        take = 1 + table[mask & adj[v]]
        table[mask] = take if take > skip else skip
    return table


def _chi_table(g: WeightedGraph) -> list[int]:
    """Chromatic number of every induced subgraph, indexed by bitmask.

    chi(S) = 1 + min over independent subsets I of S containing S's lowest
    vertex of chi(S - I); enumerating color classes that contain a fixed
    vertex keeps the recurrence canonical.
    """
    adj = g.adj
    size = 1 << g.n
    independent = [True] * size
    for mask in range(1, size):
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        independent[mask] = independent[rest] and (adj[v] & rest) == 0
    table = [0] * size
    for mask in range(1, size):
        v_bit = mask & -mask
        rest = mask & ~v_bit
        best = g.n + 1
        sub = rest
        while True:
            cls = sub | v_bit
            if independent[cls]:
                cand = 1 + table[mask & ~cls]
                if cand < best:
                    best = cand
            if sub == 0:
                break
            sub = (sub - 1) & rest
        table[mask] = best
    return table


def _definitionally_perfect(g: WeightedGraph) -> bool:
    omega = _omega_table(g)
    chi = _chi_table(g)
    return all(omega[m] == chi[m] for m in range(1 << g.n))


def omega_chi(g: WeightedGraph) -> tuple[int, int]:
    """Exact clique number and chromatic number of the whole graph."""
    if g.n > MAX_OMEGA_CHI_N:
        raise GuardError(f"omega/chi computation capped at n <= {MAX_OMEGA_CHI_N}")
    if g.n == 0:
        return 0, 0
    full = (1 << g.n) - 1
    return _omega_table(g)[full], _chi_table(g)[full]
