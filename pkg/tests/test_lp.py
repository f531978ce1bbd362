from __future__ import annotations

from fractions import Fraction

from edgering.lp import solve


def test_feasibility_only():
    res = solve([[1, 1]], [1])
    assert res.feasible
    assert sum(res.x) == 1


def test_optimum():
    # max x + 2y s.t. x + y + s = 4, x + 3y + t = 6
    res = solve([[1, 1, 1, 0], [1, 3, 0, 1]], [4, 6], [1, 2, 0, 0])
    assert res.status == "optimal"
    assert res.value == 5
    assert res.x[:2] == (Fraction(3), Fraction(1))


def test_infeasible():
    assert not solve([[1, 1]], [-1]).feasible
    assert solve([[1, 0], [1, 0]], [1, 2]).status == "infeasible"


def test_unbounded():
    assert solve([[1, -1]], [0], [1, 1]).status == "unbounded"


def test_redundant_rows():
    res = solve([[1, 1, 0], [2, 2, 0], [0, 0, 1]], [1, 2, 3], [1, 0, 0])
    assert res.status == "optimal" and res.value == 1


def test_degenerate_cycling_example():
    # Beale's example, which cycles under the textbook pivot rule
    A = [
        [Fraction(1, 4), -8, -1, 9, 1, 0, 0],
        [Fraction(1, 2), -12, Fraction(-1, 2), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    c = [Fraction(3, 4), -20, Fraction(1, 2), -6, 0, 0, 0]
    res = solve(A, [0, 0, 1], c)
    assert res.status == "optimal"
    assert res.value == Fraction(5, 4)
