"""Exact linear programming over rationals, plus the two game LPs.

The solver is a dense two-phase primal simplex on ``fractions.Fraction``
with Bland's smallest-index rule for both the entering and the leaving
choice.  Bland's rule guarantees termination under degeneracy and makes
every run reproducible: identical input yields the identical basis, hence
the identical optimal vertex.  There is no floating-point fast path.

The two problem builders are the fractional-stable-set relaxation

    maximize  sum_v w_v x_v   subject to  x(Q) <= 1  for every maximal
    clique Q,  x >= 0

and its dual, the fractional clique-cover problem

    minimize  sum_Q y_Q       subject to  sum_{Q contains v} y_Q >= w_v
    for every vertex v,  y >= 0

with variables ranging over the maximal cliques only (a multiplier on a
non-maximal clique can always be moved onto a containing maximal clique,
see :func:`cliquecore.core.lift_dual`).

Solving either public problem solves both and checks strong duality as an
exact rational equality; a mismatch raises immediately instead of
returning a wrong certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cliques import CliqueSet
from .graph import WeightedGraph, fraction_str

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LinearProgram:
    """max or min of ``objective . x`` subject to sparse rows, x >= 0.

    ``rows[i]`` maps variable index to coefficient; ``senses[i]`` is one of
    ``"<="``, ``">="``, ``"="``.  Variables have lower bound 0 and no upper
    bound.
    """

    direction: str
    objective: tuple[Fraction, ...]
    rows: tuple[dict[int, Fraction], ...]
    senses: tuple[str, ...]
    rhs: tuple[Fraction, ...]

    def validate(self):
        if self.direction not in ("max", "min"):
            raise ValueError(f"direction must be 'max' or 'min', got {self.direction!r}")
        if not (len(self.rows) == len(self.senses) == len(self.rhs)):
            raise ValueError("rows, senses and rhs lengths differ")
        nv = len(self.objective)
        for i, row in enumerate(self.rows):
            for j in row:
                if not (0 <= j < nv):
                    raise ValueError(f"row {i} references variable {j} of {nv}")
            if self.senses[i] not in ("<=", ">=", "="):
                raise ValueError(f"row {i} has unknown sense {self.senses[i]!r}")


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None
    value: Fraction | None


@dataclass(frozen=True)
class PrimalSolution:
    """Optimal fractional stable set: x[v] in [0,1] per vertex."""

    x: tuple[Fraction, ...]
    value: Fraction


@dataclass(frozen=True)
class DualSolution:
    """Optimal fractional clique cover: y[cid] >= 0 per maximal clique."""

    y: tuple[Fraction, ...]
    value: Fraction


def solve_general(lp: LinearProgram) -> LPResult:
    """Exact optimum of an arbitrary LP; basic (vertex) solution on success."""
    lp.validate()
    nv = len(lp.objective)
    sign = 1 if lp.direction == "max" else -1
    c = [sign * Fraction(x) for x in lp.objective]
    status, x = _simplex_max(nv, lp.rows, lp.senses, lp.rhs, c)
    if status != "optimal":
        return LPResult(status=status, x=None, value=None)
    value = sum((lp.objective[j] * x[j] for j in range(nv)), ZERO)
    return LPResult(status="optimal", x=tuple(x), value=value)


def _simplex_max(
    nv: int,
    rows: Sequence[dict[int, Fraction]],
    senses: Sequence[str],
    rhs: Sequence[Fraction],
    c: list[Fraction],
) -> tuple[str, list[Fraction] | None]:
    """Two-phase tableau simplex maximizing c.x, x >= 0."""
    m = len(rows)

    # Normalize to nonnegative right-hand sides.
    norm_rows: list[dict[int, Fraction]] = []
    norm_senses: list[str] = []
    norm_rhs: list[Fraction] = []
    for i in range(m):
        b = Fraction(rhs[i])
        row = {j: Fraction(a) for j, a in rows[i].items() if a != 0}
        sense = senses[i]
        if b < 0:
            b = -b
            row = {j: -a for j, a in row.items()}
            sense = {"<=": ">=", ">=": "<=", "=": "="}[sense]
        norm_rows.append(row)
        norm_senses.append(sense)
        norm_rhs.append(b)

    n_le = sum(1 for s in norm_senses if s == "<=")
    n_ge = sum(1 for s in norm_senses if s == ">=")
    n_art = sum(1 for s in norm_senses if s in (">=", "="))
    slack0 = nv
    surplus0 = nv + n_le
    art0 = nv + n_le + n_ge
    ncols = art0 + n_art

    tab: list[list[Fraction]] = []
    basis: list[int] = []
    i_le = i_ge = i_art = 0
    for i in range(m):
        dense = [ZERO] * (ncols + 1)
        for j, a in norm_rows[i].items():
            dense[j] = a
        dense[ncols] = norm_rhs[i]
        s = norm_senses[i]
        if s == "<=":
            dense[slack0 + i_le] = ONE
            basis.append(slack0 + i_le)
            i_le += 1
        elif s == ">=":
            dense[surplus0 + i_ge] = -ONE
            i_ge += 1
            dense[art0 + i_art] = ONE
            basis.append(art0 + i_art)
            i_art += 1
        else:
            dense[art0 + i_art] = ONE
            basis.append(art0 + i_art)
            i_art += 1
        tab.append(dense)

    def pivot(pr: int, pc: int, z: list[Fraction]):
        prow = tab[pr]
        piv = prow[pc]
        if piv != 1:
            inv = ONE / piv
            tab[pr] = prow = [a * inv for a in prow]
        for row in tab:
            if row is prow:
                continue
            f = row[pc]
            if f:
                for j, a in enumerate(prow):
                    if a:
                        row[j] -= f * a
        f = z[pc]
        if f:
            for j, a in enumerate(prow):
                if a:
                    z[j] -= f * a
        basis[pr] = pc

    def run(z: list[Fraction], banned_from: int) -> str:
        # z[j] = c_B.B^-1.A_j - c_j ; optimal when all z >= 0 (maximization)
        while True:
            pc = -1
            for j in range(banned_from):
                if z[j] < 0:
                    pc = j
                    break
            if pc < 0:
                return "optimal"
            pr = -1
            best_ratio = None
            best_var = None
            for i in range(m):
                a = tab[i][pc]
                if a > 0:
                    ratio = tab[i][ncols] / a
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < best_var)
                    ):
                        best_ratio, best_var, pr = ratio, basis[i], i
            if pr < 0:
                return "unbounded"
            pivot(pr, pc, z)

    def z_row_for(cost: list[Fraction]) -> list[Fraction]:
        z = [-cost[j] for j in range(ncols)] + [ZERO]
        for i in range(m):
            cb = cost[basis[i]]
            if cb:
                row = tab[i]
                for j in range(ncols + 1):
                    if row[j]:
                        z[j] += cb * row[j]
        return z

    if n_art > 0:
        cost1 = [ZERO] * ncols
        for j in range(art0, ncols):
            cost1[j] = -ONE
        z1 = z_row_for(cost1)
        st = run(z1, ncols)
        if st != "optimal":  # phase 1 is bounded above by 0
            raise RuntimeError("phase 1 reported unbounded; solver invariant broken")
        if z1[ncols] != 0:
            return "infeasible", None
        # Drive zero-valued artificials out; drop rows that turn out redundant.
        drop: list[int] = []
        for i in range(m):
            if basis[i] >= art0:
                pc = next((j for j in range(art0) if tab[i][j] != 0), None)
                if pc is None:
                    drop.append(i)
                else:
                    pivot(i, pc, z1)
        for i in reversed(drop):
            del tab[i]
            del basis[i]
        m = len(tab)

    cost2 = [ZERO] * ncols
    for j in range(nv):
        cost2[j] = c[j]
    z2 = z_row_for(cost2)
    st = run(z2, art0)  # artificial columns can never re-enter
    if st == "unbounded":
        return "unbounded", None
    x = [ZERO] * nv
    for i in range(m):
        if basis[i] < nv:
            x[basis[i]] = tab[i][ncols]
    return "optimal", x


def build_stable_set_lp(
    weights: Sequence[Fraction], clique_members: Sequence[Iterable[int]]
) -> LinearProgram:
    """Fractional stable-set relaxation over the given clique rows."""
    rows = tuple({v: ONE for v in q} for q in clique_members)
    return LinearProgram(
        direction="max",
        objective=tuple(Fraction(w) for w in weights),
        rows=rows,
        senses=tuple("<=" for _ in rows),
        rhs=tuple(ONE for _ in rows),
    )


def build_clique_cover_lp(
    weights: Sequence[Fraction], clique_members: Sequence[Iterable[int]]
) -> LinearProgram:
    """Fractional clique-cover problem with one variable per given clique."""
    n = len(weights)
    rows: list[dict[int, Fraction]] = [dict() for _ in range(n)]
    for cid, q in enumerate(clique_members):
        for v in q:
            rows[v][cid] = ONE
    return LinearProgram(
        direction="min",
        objective=tuple(ONE for _ in clique_members),
        rows=tuple(rows),
        senses=tuple(">=" for _ in range(n)),
        rhs=tuple(Fraction(w) for w in weights),
    )


def _solve_pair(g: WeightedGraph, cliques: CliqueSet) -> tuple[LPResult, LPResult]:
    primal = solve_general(build_stable_set_lp(g.weights, cliques.cliques))
    dual = solve_general(build_clique_cover_lp(g.weights, cliques.cliques))
    if primal.status != "optimal" or dual.status != "optimal":
        raise RuntimeError(
            f"game LPs must be solvable (primal {primal.status}, dual {dual.status})"
        )
    if primal.value != dual.value:
        raise RuntimeError(
            "strong duality violated: primal "
            f"{fraction_str(primal.value)} != dual {fraction_str(dual.value)}"
        )
    return primal, dual


def solve_primal(g: WeightedGraph, cliques: CliqueSet) -> PrimalSolution:
    """Exact optimal vertex of the fractional stable-set relaxation.

    Also solves the dual and insists on exact strong duality before
    returning.
    """
    primal, _ = _solve_pair(g, cliques)
    return PrimalSolution(x=primal.x, value=primal.value)


def solve_dual(g: WeightedGraph, cliques: CliqueSet) -> DualSolution:
    """Exact optimal vertex of the fractional clique-cover problem.

    The dual is solved directly as its own LP rather than read off the
    primal tableau, so the returned point is always a genuine dual vertex
    even when the primal is degenerate.  Strong duality against the primal
    optimum is checked exactly before returning.
    """
    _, dual = _solve_pair(g, cliques)
    return DualSolution(y=dual.x, value=dual.value)


def is_integral(solution) -> bool:
    """Exact integrality test: every coordinate has denominator 1.

    Accepts a PrimalSolution, a DualSolution, anything with ``.x`` or
    ``.y``/``.values`` coordinates, or a plain iterable of Fractions.
    """
    coords = getattr(solution, "x", None)
    if coords is None:
        coords = getattr(solution, "y", None)
    if coords is None:
        coords = getattr(solution, "values", None)
    if coords is None:
        coords = solution
    return all(Fraction(v).denominator == 1 for v in coords)


def lp_format(lp: LinearProgram, name: str = "problem") -> str:
    """Render in the standard LP interchange text format for cross-checking.

    LP files carry decimal numbers, so each constraint row is scaled by its
    rhs denominator and a fractional objective is scaled by the common
    denominator of its coefficients (noted in a leading comment); scaling
    rows never moves the feasible region and scaling the objective never
    moves the argmax.
    """
    lp.validate()
    lines = [f"\\ {name}"]
    obj_den = 1
    for w in lp.objective:
        obj_den = math.lcm(obj_den, w.denominator)
    if obj_den != 1:
        lines.append(f"\\ objective scaled by {obj_den}")
    lines.append("Maximize" if lp.direction == "max" else "Minimize")
    terms = _terms(
        {j: w * obj_den for j, w in enumerate(lp.objective) if w != 0}
    )
    lines.append(f" obj: {terms if terms else '0 x0'}")
    lines.append("Subject To")
    for i, row in enumerate(lp.rows):
        den = lp.rhs[i].denominator
        for a in row.values():
            den = math.lcm(den, a.denominator)
        scaled = {j: a * den for j, a in row.items() if a != 0}
        body = _terms(scaled) if scaled else "0 x0"
        lines.append(f" c{i}: {body} {lp.senses[i]} {lp.rhs[i] * den}")
    lines.append("Bounds")
    for j in range(len(lp.objective)):
        lines.append(f" 0 <= x{j}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def _terms(coeffs: dict[int, Fraction]) -> str:
    parts = []
    for j in sorted(coeffs):
        a = coeffs[j]
        if not parts:
            parts.append(f"{a} x{j}" if a != 1 else f"x{j}")
        elif a < 0:
            parts.append(f"- {-a} x{j}" if a != -1 else f"- x{j}")
        else:
            parts.append(f"+ {a} x{j}" if a != 1 else f"+ x{j}")
    return " ".join(parts)
