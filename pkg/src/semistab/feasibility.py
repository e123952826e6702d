"""Exact rational linear feasibility via phase-1 simplex.

Desk-scale only: the instability searches feed systems with at most a few
dozen variables, so a dense tableau with Fractions and Bland's rule is
both exact and fast enough.  No tolerances anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Row = Sequence[Fraction]


def feasible_point(
    a_rows: Sequence[Row], b: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """Find x >= 0 with A x = b, or None if the system is infeasible.

    Phase-1 simplex with artificial variables and Bland's anti-cycling rule.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    # Normalize rows so b >= 0.
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(x) for x in a_rows[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rows.append(row)
        rhs.append(bi)
    # Tableau columns: x_0..x_{n-1}, artificials a_0..a_{m-1}.
    tableau = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # Objective: minimize sum of artificials. cost[j] = reduced cost.
    cost = [Fraction(0)] * (n + m + 1)
    for j in range(n, n + m):
        cost[j] = Fraction(1)
    for i in range(m):
        for j in range(n + m + 1):
            cost[j] -= tableau[i][j]

    total = n + m
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        # Ratio test, Bland: smallest basis index among ties.
        leave = None
        best = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # Unbounded phase-1 cannot happen (objective bounded below by 0).
            return None
        pivot = tableau[leave][enter]
        tableau[leave] = [x / pivot for x in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, tableau[leave])]
        basis[leave] = enter

    objective = -cost[-1]
    if objective != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = tableau[i][-1]
    return x
