import pytest

from fillpoly.matchings import (MAX_ENUM_RUNGS, TAIL_VARS, binom,
                                count_subsets, count_subsets_oracle,
                                enumerate_matchings, matching_step_check,
                                matching_sum, matching_sum_rec,
                                matching_weight, pair_weight, rung_weight)
from fillpoly.poly import Poly


def fib(n):
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def test_enumeration_small_cases():
    assert enumerate_matchings(1) == [()]
    assert enumerate_matchings(2) == [(), (1,)]
    assert enumerate_matchings(3) == [(), (1,), (2,)]
    assert enumerate_matchings(4) == [(), (1,), (1, 3), (2,), (3,)]


def test_enumeration_counts_are_fibonacci():
    for n in range(1, 13):
        assert len(enumerate_matchings(n)) == fib(n + 1)


def test_enumeration_no_consecutive():
    for sel in enumerate_matchings(9):
        assert all(b - a >= 2 for a, b in zip(sel, sel[1:]))


def test_enumeration_guards():
    with pytest.raises(ValueError):
        enumerate_matchings(0)
    with pytest.raises(ValueError):
        enumerate_matchings(MAX_ENUM_RUNGS + 1)


def test_edge_weights():
    g_f = Poly.variable(TAIL_VARS, "g_f")
    g_o = Poly.variable(TAIL_VARS, "g_o")
    g_p = Poly.variable(TAIL_VARS, "g_p")
    assert pair_weight(1) == g_f ** 2
    assert pair_weight(2) == g_o ** 2
    assert rung_weight(1) == g_p
    assert rung_weight(2) == -g_p


def test_matching_weight():
    g_f = Poly.variable(TAIL_VARS, "g_f")
    g_p = Poly.variable(TAIL_VARS, "g_p")
    # three rungs, pair on (1,2): weight g_f^2 * rung_3 = g_f^2 * g_p
    assert matching_weight(3, (1,)) == g_f ** 2 * g_p
    # all rungs unpaired: product of alternating-sign rung weights
    assert matching_weight(2, ()) == -g_p ** 2
    with pytest.raises(ValueError):
        matching_weight(3, (3,))
    with pytest.raises(ValueError):
        matching_weight(4, (1, 2))


def test_matching_sum_small():
    g_f = Poly.variable(TAIL_VARS, "g_f")
    g_p = Poly.variable(TAIL_VARS, "g_p")
    assert matching_sum(1) == g_p
    assert matching_sum(2) == g_f ** 2 - g_p ** 2


def test_recurrence_route_matches_enumeration():
    for n in range(0, 13):
        want = Poly.one(TAIL_VARS) if n == 0 else matching_sum(n)
        assert matching_sum_rec(n) == want


def test_step_recurrence():
    for k in range(2, 11):
        assert matching_step_check(k)
    with pytest.raises(ValueError):
        matching_step_check(1)


def test_binom_conventions():
    assert binom(-3, 0) == 1
    assert binom(0, 0) == 1
    assert binom(5, 2) == 10
    assert binom(2, 5) == 0
    assert binom(-1, 1) == 0


def test_count_subsets_matches_oracle():
    for n in range(1, 7):
        for a in range(0, n + 1):
            for b in range(0, n + 1):
                assert count_subsets(n, a, b) == count_subsets_oracle(n, a, b)
    with pytest.raises(ValueError):
        count_subsets(0, 0, 0)


def test_count_subsets_totals():
    # summed over all (a, b) the closed form counts every matching once
    for n in range(1, 7):
        total = sum(count_subsets(n, a, b)
                    for a in range(n + 1) for b in range(n + 1))
        assert total == len(enumerate_matchings(2 * n))
