"""Nullspace extraction for the 8x8 scalar operator matrices.

Exact mode clears denominators row-wise and runs fraction-free (Bareiss)
elimination over the integers, so no intermediate rationals appear until the
final back-substitution.  Float mode uses column-pivoted elimination with
zero-at-scale pivot decisions.  Both return a single kernel vector built from
the first free column, which keeps reports deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import ToleranceSpec


def _clear_row(row):
    den = 1
    for x in row:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return [int(x * den) for x in row]


def exact_nullspace_vector(rows):
    """One exact kernel vector of a matrix of Fractions, or None if regular.

    The vector is normalized so its first nonzero coordinate is 1.
    """
    m = [_clear_row([Fraction(x) for x in row]) for row in rows]
    nrows = len(m)
    ncols = len(m[0])
    prev = 1
    pivots = []  # (row, col) in echelon order
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            fac = m[i][c]
            m[i] = [(piv * m[i][k] - fac * m[r][k]) // prev for k in range(ncols)]
        prev = piv
        pivots.append((r, c))
        r += 1
    piv_cols = {c for _, c in pivots}
    free = [c for c in range(ncols) if c not in piv_cols]
    if not free:
        return None
    x = [Fraction(0)] * ncols
    x[free[0]] = Fraction(1)
    for rr, cc in reversed(pivots):
        s = sum((Fraction(m[rr][k]) * x[k] for k in range(cc + 1, ncols)), Fraction(0))
        x[cc] = -s / m[rr][cc]
    lead = next(v for v in x if v != 0)
    return [v / lead for v in x]


def float_nullspace_vector(rows, tol: ToleranceSpec):
    """One kernel vector of a float matrix, or None if numerically regular.

    Pivots are chosen by largest magnitude in the current column and declared
    zero at the scale of the largest original entry.  The vector is
    normalized to unit max-coordinate.
    """
    m = [[float(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0])
    scale = max((abs(e) for row in m for e in row), default=0.0) or 1.0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = max(range(r, nrows), key=lambda i: abs(m[i][c]))
        if tol.is_zero(m[pr][c], scale):
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            fac = m[i][c] / piv
            if fac != 0.0:
                m[i] = [m[i][k] - fac * m[r][k] for k in range(ncols)]
        pivots.append((r, c))
        r += 1
    piv_cols = {c for _, c in pivots}
    free = [c for c in range(ncols) if c not in piv_cols]
    if not free:
        return None
    x = [0.0] * ncols
    x[free[0]] = 1.0
    for rr, cc in reversed(pivots):
        s = sum((m[rr][k] * x[k] for k in range(cc + 1, ncols)), 0.0)
        x[cc] = -s / m[rr][cc]
    lead = max(x, key=abs)
    return [v / lead for v in x]
