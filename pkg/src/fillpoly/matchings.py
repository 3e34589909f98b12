"""Weighted perfect matchings of ladder graphs.

A ladder with n rungs has perfect matchings in bijection with the subsets
of {1..n-1} without consecutive elements: each selected position i pairs
rungs i and i+1 through the two horizontal edges, and every unpaired rung
is matched by its own rung edge.  Rung i carries weight (-1)^(i+1) * g_p,
a horizontal pair at position i carries g_f^2 for odd i and g_o^2 for even
i.  The weighted sum over all matchings gives a three-variable polynomial
whose coefficients have a closed binomial form, verified here by brute
force.
"""

from math import comb

from .poly import Poly

TAIL_VARS = ("g_f", "g_o", "g_p")

# enumeration is exponential by design; refuse sizes past this
MAX_ENUM_RUNGS = 24


def enumerate_matchings(n):
    """All no-consecutive subsets of {1..n-1}, as sorted tuples.

    These are exactly the perfect matchings of the n-rung ladder.  The
    count is the Fibonacci number F(n+1) with F(1) = F(2) = 1.
    """
    if n < 1:
        raise ValueError("ladder needs at least one rung")
    if n > MAX_ENUM_RUNGS:
        raise ValueError("refusing to enumerate %d rungs (limit %d)"
                         % (n, MAX_ENUM_RUNGS))
    out = []
    for mask in range(1 << (n - 1)):
        if mask & (mask << 1):
            continue
        out.append(tuple(i + 1 for i in range(n - 1) if mask >> i & 1))
    out.sort()
    return out


def pair_weight(i):
    """Weight of the horizontal pair joining rungs i and i+1."""
    name = "g_f" if i % 2 else "g_o"
    return Poly.variable(TAIL_VARS, name) ** 2


def rung_weight(i):
    """Weight of the rung edge at rung i; signs alternate starting +."""
    g_p = Poly.variable(TAIL_VARS, "g_p")
    return g_p if i % 2 else -g_p


def matching_weight(n, selection):
    """Weight of one matching, given its selected pair positions."""
    covered = set()
    for i in selection:
        if not 1 <= i <= n - 1:
            raise ValueError("pair position %d out of range for %d rungs" % (i, n))
        if i in covered or i + 1 in covered:
            raise ValueError("overlapping pairs in %r" % (selection,))
        covered.add(i)
        covered.add(i + 1)
    w = Poly.one(TAIL_VARS)
    for i in selection:
        w = w * pair_weight(i)
    for j in range(1, n + 1):
        if j not in covered:
            w = w * rung_weight(j)
    return w


def matching_sum(n):
    """Sum of matching weights over the whole ladder, by enumeration."""
    total = Poly.zero(TAIL_VARS)
    for sel in enumerate_matchings(n):
        total = total + matching_weight(n, sel)
    return total


def matching_sum_rec(n):
    """Same polynomial through the two-term recurrence.

    Splitting on whether the last rung is paired gives
      odd  k:  S(k) =  g_p * S(k-1) + g_o^2 * S(k-2)
      even k:  S(k) = -g_p * S(k-1) + g_f^2 * S(k-2)
    with S(0) = 1 and S(1) = g_p.
    """
    if n < 0:
        raise ValueError("rung count must be non-negative")
    g_p = Poly.variable(TAIL_VARS, "g_p")
    g_f2 = Poly.variable(TAIL_VARS, "g_f") ** 2
    g_o2 = Poly.variable(TAIL_VARS, "g_o") ** 2
    older = Poly.one(TAIL_VARS)
    if n == 0:
        return older
    newer = g_p
    for k in range(2, n + 1):
        if k % 2:
            nxt = g_p * newer + g_o2 * older
        else:
            nxt = -g_p * newer + g_f2 * older
        older, newer = newer, nxt
    return newer


def _sum_or_one(k):
    return Poly.one(TAIL_VARS) if k == 0 else matching_sum(k)


def matching_step_check(k):
    """Does the parity-matched two-term recurrence hold at step k (k >= 2)?"""
    if k < 2:
        raise ValueError("recurrence needs k >= 2")
    g_p = Poly.variable(TAIL_VARS, "g_p")
    if k % 2:
        rhs = g_p * _sum_or_one(k - 1) + Poly.variable(TAIL_VARS, "g_o") ** 2 * _sum_or_one(k - 2)
    else:
        rhs = -g_p * _sum_or_one(k - 1) + Poly.variable(TAIL_VARS, "g_f") ** 2 * _sum_or_one(k - 2)
    return matching_sum(k) == rhs


def binom(x, k):
    """Binomial with the convention C(x, 0) = 1 for every integer x."""
    if k == 0:
        return 1
    if k < 0 or x < 0 or k > x:
        return 0
    return comb(x, k)


def count_subsets(n, a, b):
    """Closed form for the number of no-consecutive subsets of {1..2n-1}
    with exactly a odd and b even elements."""
    if n < 1 or a < 0 or b < 0:
        raise ValueError("need n >= 1 and non-negative a, b")
    return binom(n - 1 - a, b) * binom(n - b, a)


def count_subsets_oracle(n, a, b):
    """The same count by direct enumeration."""
    if n < 1 or a < 0 or b < 0:
        raise ValueError("need n >= 1 and non-negative a, b")
    hits = 0
    for sel in enumerate_matchings(2 * n):
        odd = sum(1 for i in sel if i % 2)
        if odd == a and len(sel) - odd == b:
            hits += 1
    return hits
