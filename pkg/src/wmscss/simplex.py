"""Dense exact-rational simplex for ``max c.v  s.t.  M v <= b, v >= 0``
with ``b >= 0``, so the slack basis is feasible from the start.

Pivoting follows Bland's rule, which cannot cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InfeasibleError

ZERO = Fraction(0)


@dataclass
class SimplexResult:
    value: Fraction
    primal: list[Fraction]   # v
    dual: list[Fraction]     # one multiplier per row of M
    pivots: int


def maximize(c: Sequence[Fraction], rows: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> SimplexResult:
    """Solve the LP; raises :class:`InfeasibleError` when it is unbounded.

    The returned ``dual`` is the optimal solution of
    ``min b.y  s.t.  M^T y >= c, y >= 0`` read off the final reduced costs
    of the slack columns.
    """
    m = len(rows)
    k = len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("right-hand side must be non-negative")
    width = k + m
    tab = []
    for i, row in enumerate(rows):
        r = [Fraction(x) for x in row] + [ZERO] * m
        r[k + i] = Fraction(1)
        tab.append(r)
    rhs = [Fraction(x) for x in b]
    # reduced costs d_j = c_j - c_B B^-1 M_j; objective tracked as z
    red = [Fraction(x) for x in c] + [ZERO] * m
    z = ZERO
    basis = [k + i for i in range(m)]
    pivots = 0

    while True:
        enter = next((j for j in range(width) if red[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise InfeasibleError("objective is unbounded")
        piv = tab[leave][enter]
        prow = tab[leave]
        if piv != 1:
            prow = [x / piv for x in prow]
            tab[leave] = prow
            rhs[leave] /= piv
        nz = [j for j in range(width) if prow[j]]
        for i in range(m):
            if i == leave:
                continue
            f = tab[i][enter]
            if f:
                row = tab[i]
                for j in nz:
                    row[j] -= f * prow[j]
                rhs[i] -= f * rhs[leave]
        f = red[enter]
        for j in nz:
            red[j] -= f * prow[j]
        z += f * rhs[leave]
        basis[leave] = enter
        pivots += 1

    primal = [ZERO] * k
    for i, j in enumerate(basis):
        if j < k:
            primal[j] = rhs[i]
    dual = [-red[k + i] for i in range(m)]
    return SimplexResult(z, primal, dual, pivots)
