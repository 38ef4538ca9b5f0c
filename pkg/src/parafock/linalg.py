"""Exact linear algebra over the rationals.

Rank and null spaces are computed with fraction-free (Bareiss-style)
elimination on integer matrices; rational input rows are cleared to integers
first.  There are no pivot tolerances because there is no rounding.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _integer_rows(mat) -> list[list[int]]:
    out = []
    for row in mat:
        fracs = [Fraction(x) for x in row]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * den) for f in fracs])
    return out


def bareiss_echelon(mat) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns (rows, pivot_cols) where ``rows`` are the nonzero echelon rows
    (integers) and ``pivot_cols[r]`` is the pivot column of row ``r``.
    Row scaling on input does not change rank or null space.
    """
    m = _integer_rows(mat)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            for j in range(col + 1, ncols):
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        pivots.append(col)
        r += 1
    return m[:r], pivots


def rank(mat) -> int:
    return len(bareiss_echelon(mat)[0])


def rank_and_nullspace(mat) -> tuple[int, list[list[Fraction]]]:
    """Exact rank and a basis of the right null space {x : mat @ x = 0}."""
    rows, pivots = bareiss_echelon(mat)
    ncols = len(mat[0]) if mat else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(rows) - 1, -1, -1):
            pc = pivots[r]
            s = sum((Fraction(rows[r][c]) * x[c] for c in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / rows[r][pc]
        basis.append(x)
    return len(rows), basis


def integerize(vec) -> list[int]:
    """Scale a rational vector to coprime integers with positive leading entry."""
    fracs = [Fraction(x) for x in vec]
    den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints) if any(ints) else 1
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints


def in_row_span(rows, vec) -> bool:
    """Whether ``vec`` lies in the rational row span of ``rows``."""
    base = [list(r) for r in rows]
    return rank(base) == rank(base + [list(vec)])
