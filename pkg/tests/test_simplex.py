import random
from fractions import Fraction

import pytest

from ltcg.simplex import Infeasible, check_feasible_ge, solve_max_le, solve_min_ge

F = Fraction


def test_tiny_diet_lp():
    # min x + 2y s.t. x + y >= 3, x >= 1  ->  x = 3, y = 0.
    sol = solve_min_ge([F(1), F(2)], [[F(1), F(1)], [F(1), F(0)]], [F(3), F(1)])
    assert sol.value == 3
    assert sol.x == [F(3), F(0)]


def test_max_le_form():
    # max 3x + 2y s.t. x + y <= 4, x <= 2  ->  x = 2, y = 2, value 10.
    sol = solve_max_le([F(3), F(2)], [[F(1), F(1)], [F(1), F(0)]], [F(4), F(2)])
    assert sol.value == 10


def test_infeasible():
    # x >= 2 and -x >= -1 cannot both hold.
    with pytest.raises(Infeasible):
        solve_min_ge([F(1)], [[F(1)], [F(-1)]], [F(2), F(-1)])


def test_exact_fractional_optimum():
    # min x + y s.t. 2x + y >= 1, x + 3y >= 1  ->  intersection (2/5, 1/5).
    sol = solve_min_ge([F(1), F(1)], [[F(2), F(1)], [F(1), F(3)]], [F(1), F(1)])
    assert sol.x == [F(2, 5), F(1, 5)]
    assert sol.value == F(3, 5)


def test_degenerate_zero_rhs():
    # Rows with zero right-hand side take the slack-basic path.
    sol = solve_min_ge([F(1), F(0)], [[F(1), F(-1)], [F(0), F(1)]], [F(0), F(2)])
    assert sol.value == 2


def test_random_lps_against_duality():
    # Strong duality as an oracle: primal and dual optima must coincide,
    # and both solutions must verify feasibility exactly.
    rng = random.Random(42)
    solved = 0
    for _ in range(40):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = [[F(rng.randint(0, 4)) for _ in range(n)] for _ in range(m)]
        b = [F(rng.randint(0, 5)) for _ in range(m)]
        c = [F(rng.randint(1, 5)) for _ in range(n)]
        try:
            sol = solve_min_ge(c, a, b)
        except Infeasible:
            continue
        assert check_feasible_ge(a, b, sol.x)
        # dual: max b.y s.t. A^T y <= c, y >= 0
        at = [[a[i][j] for i in range(m)] for j in range(n)]
        dsol = solve_max_le(b, at, c)
        assert dsol.value == sol.value
        solved += 1
    assert solved >= 20
