"""Self-contained exact simplex over rationals for desk-scale LPs.

Solves  min c.x  subject to  A x >= b, x >= 0  with Fraction arithmetic,
two phases and Bland's pivoting rule (deterministic, cycle-free).  Dense
tableaux only; intended for a few hundred variables at most.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


@dataclass
class LPSolution:
    x: list[Fraction]
    value: Fraction


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    inv = ONE / piv
    prow = tab[row]
    if piv != 1:
        for j, v in enumerate(prow):
            if v:
                prow[j] = v * inv
    nz = [j for j, v in enumerate(prow) if v]
    for r, trow in enumerate(tab):
        if r == row:
            continue
        f = trow[col]
        if f:
            for j in nz:
                trow[j] = trow[j] - f * prow[j]
    basis[row] = col


def _run_simplex(tab: list[list[Fraction]], basis: list[int], ncols: int, allowed: int) -> None:
    # Objective row is tab[-1]; entering column = lowest index with a
    # negative reduced cost (Bland), leaving row = lowest basis index
    # among the minimum ratios.
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        enter = -1
        for j in range(allowed):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return
        leave = -1
        best: Fraction | None = None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = tab[r][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave < 0:
            raise Unbounded("no blocking row for the entering column")
        _pivot(tab, basis, leave, enter)


def solve_min_ge(c: Sequence[Fraction], a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> LPSolution:
    """Minimize c.x subject to A x >= b, x >= 0 (all exact rationals).

    Rows with nonpositive right-hand side are negated so their slack can
    start basic; the rest get artificial variables driven out in phase 1.
    """
    m, n = len(a), len(c)
    c = [Fraction(v) for v in c]
    rows = [[Fraction(v) for v in row] for row in a]
    rhs = [Fraction(v) for v in b]

    art_rows = [i for i in range(m) if rhs[i] > 0]
    n_art = len(art_rows)
    ncols = n + m + n_art  # structural | slack/surplus | artificial
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    art_index = {}
    for idx, i in enumerate(art_rows):
        art_index[i] = n + m + idx
    for i in range(m):
        if rhs[i] > 0:
            # a.x - s = b, artificial basic
            row = rows[i] + [ZERO] * (m + n_art) + [rhs[i]]
            row[n + i] = -ONE
            row[art_index[i]] = ONE
            basis.append(art_index[i])
        else:
            # -a.x + s = -b, slack basic
            row = [-v for v in rows[i]] + [ZERO] * (m + n_art) + [-rhs[i]]
            row[n + i] = ONE
            basis.append(n + i)
        tab.append(row)

    if n_art:
        # Phase 1: minimize the sum of artificials.  Start from the raw
        # costs (+1 on artificial columns) and zero out the reduced costs
        # of the basic artificials.
        obj = [ZERO] * (ncols + 1)
        for idx in range(n_art):
            obj[n + m + idx] = ONE
        for r, bi in enumerate(basis):
            if bi >= n + m:
                obj = [o - v for o, v in zip(obj, tab[r])]
        tab.append(obj)
        _run_simplex(tab, basis, ncols, allowed=ncols)
        if tab[-1][ncols] != 0:
            raise Infeasible("phase 1 optimum is nonzero")
        tab.pop()
        # Pivot any artificial still basic (at zero) out of the basis.
        for r in range(m):
            if basis[r] >= n + m:
                piv_col = next((j for j in range(n + m) if tab[r][j] != 0), None)
                if piv_col is None:
                    continue  # redundant row
                _pivot(tab, basis, r, piv_col)

    # Phase 2 objective: reduced costs of c against the current basis.
    obj = [ZERO] * (ncols + 1)
    for j in range(n):
        obj[j] = c[j]
    for r, bi in enumerate(basis):
        coef = c[bi] if bi < n else ZERO
        if coef:
            obj = [o - coef * v for o, v in zip(obj, tab[r])]
    tab.append(obj)
    _run_simplex(tab, basis, ncols, allowed=n + m)  # artificials stay out

    x = [ZERO] * n
    for r, bi in enumerate(basis):
        if bi < n:
            x[bi] = tab[r][ncols]
    value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    return LPSolution(x=x, value=value)


def solve_max_le(c: Sequence[Fraction], a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> LPSolution:
    """Maximize c.y subject to A y <= b, y >= 0, via the >= form."""
    neg = solve_min_ge([-v for v in c], [[-v for v in row] for row in a], [-v for v in b])
    return LPSolution(x=neg.x, value=-neg.value)


def check_feasible_ge(a, b, x, tol: Fraction | float = 0) -> bool:
    """Exact componentwise check of A x >= b, x >= 0."""
    if any(v < 0 for v in x):
        return False
    for row, bi in zip(a, b):
        lhs = sum((cv * xv for cv, xv in zip(row, x)), ZERO)
        if lhs < bi - tol:
            return False
    return True
