"""Exact rational linear algebra: row selection, square solves, phase-one simplex."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .exact import q


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, earliest rows first."""
    basis = []  # (pivot column, reduced row)
    keep = []
    for idx, row in enumerate(rows):
        r = [Fraction(v) for v in row]
        for col, b in basis:
            if r[col]:
                c = r[col] / b[col]
                r = [u - c * v for u, v in zip(r, b)]
        piv = next((j for j, v in enumerate(r) if v), None)
        if piv is not None:
            basis.append((piv, r))
            keep.append(idx)
    return keep


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve a nonsingular square system exactly (Gauss-Jordan)."""
    n = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [u - c * v for u, v in zip(m[r], m[col])]
    return [q(m[r][n]) for r in range(n)]


def phase_one(a_eq: Sequence[Sequence], b_eq: Sequence) -> Optional[list]:
    """A point of {lam >= 0 : A lam = b}, or None when empty.

    Tableau simplex with one artificial per row and Bland's rule, so it
    terminates; everything is exact.
    """
    rows = len(a_eq)
    cols = len(a_eq[0]) if rows else 0
    tab = []
    for i in range(rows):
        row = [Fraction(v) for v in a_eq[i]]
        rhs = Fraction(b_eq[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [Fraction(0)] * rows
        art[i] = Fraction(1)
        tab.append(row + art + [rhs])
    width = cols + rows
    basis = [cols + i for i in range(rows)]
    # reduced costs for min sum(artificials)
    cost = [Fraction(0)] * (width + 1)
    for i in range(rows):
        for j in range(width + 1):
            cost[j] -= tab[i][j]
    for i in range(rows):
        cost[cols + i] += 1
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(rows):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen in phase one (objective bounded below)
            break
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter]:
                c = tab[i][enter]
                tab[i] = [u - c * v for u, v in zip(tab[i], tab[leave])]
        c = cost[enter]
        cost = [u - c * v for u, v in zip(cost, tab[leave])]
        basis[leave] = enter
    if cost[width] != 0:
        return None
    lam = [Fraction(0)] * cols
    for i, var in enumerate(basis):
        if var < cols:
            lam[var] = tab[i][width]
    return [q(v) for v in lam]


def convex_weights(points: Sequence[Sequence], target: Sequence) -> Optional[list]:
    """Weights expressing ``target`` as a convex combination of ``points``."""
    if not points:
        return None
    n = len(target)
    a_eq = [[p[i] for p in points] for i in range(n)]
    a_eq.append([1] * len(points))
    return phase_one(a_eq, list(target) + [1])
