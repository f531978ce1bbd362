"""Exact two-phase simplex over ``fractions.Fraction`` with Bland's rule.

Problems are in equality form::

    maximize c.x  subject to  A x = b,  x >= 0

Sizes here are tiny (a dozen rows, a few dozen columns), so a dense tableau
of Fractions is the simplest thing that is provably terminating and exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Number = int | Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            self.rows[r] = row = [a / piv for a in row]
            self.rhs[r] /= piv
        for k, other in enumerate(self.rows):
            if k == r:
                continue
            f = other[col]
            if f:
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
                self.rhs[k] -= f * self.rhs[r]
        self.basis[r] = col

    def reduced_costs(self, c: Sequence[Fraction]) -> list[Fraction]:
        # c_j - c_B . B^{-1} A_j
        red = list(c)
        for r, bv in enumerate(self.basis):
            cb = c[bv]
            if cb:
                row = self.rows[r]
                red = [a - cb * b for a, b in zip(red, row)]
        return red

    def run(self, c: Sequence[Fraction], allowed: Sequence[bool]) -> str:
        while True:
            red = self.reduced_costs(c)
            entering = next((j for j, rc in enumerate(red) if rc > 0 and allowed[j]), None)
            if entering is None:
                return "optimal"
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[r] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)


def solve(A: Sequence[Sequence[Number]], b: Sequence[Number], c: Sequence[Number] | None = None) -> LPResult:
    """Solve ``max c.x, A x = b, x >= 0`` exactly; ``c=None`` is a pure feasibility test."""
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    if c is None:
        c = [0] * ncols
    rows = []
    rhs = []
    for i in range(nrows):
        row = [Fraction(a) for a in A[i]]
        beta = Fraction(b[i])
        if beta < 0:
            row = [-a for a in row]
            beta = -beta
        rows.append(row)
        rhs.append(beta)

    # phase 1: artificial column per row
    total = ncols + nrows
    for i, row in enumerate(rows):
        row.extend(Fraction(1 if k == i else 0) for k in range(nrows))
    tab = _Tableau(rows, rhs, list(range(ncols, total)))
    phase1 = [Fraction(0)] * ncols + [Fraction(-1)] * nrows
    tab.run(phase1, [True] * total)
    if sum(tab.rhs[r] for r, bv in enumerate(tab.basis) if bv >= ncols) != 0:
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis; drop redundant rows
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= ncols:
            col = next((j for j in range(ncols) if tab.rows[r][j] != 0), None)
            if col is None:
                del tab.rows[r], tab.rhs[r], tab.basis[r]
                continue
            tab.pivot(r, col)
        r += 1

    cost = [Fraction(v) for v in c] + [Fraction(0)] * nrows
    allowed = [True] * ncols + [False] * nrows
    status = tab.run(cost, allowed)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * ncols
    for r, bv in enumerate(tab.basis):
        x[bv] = tab.rhs[r]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), value)
