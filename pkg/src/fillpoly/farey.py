"""Slopes, Farey neighbors, triangle walks and crossing counts.

Slopes are reduced fractions p/q with q >= 0, plus the slope at infinity
stored as 1/0.  Two slopes are neighbors when |determinant| of their
coordinate vectors is 1; triples of mutual neighbors form triangles, and a
walk is a start triangle, the adjacent triangle entered first, and a word
over {L, R} describing which way the path continues through the triangle
fan at each subsequent vertex.

walk_labels assigns each step of the walk four slopes with fixed roles:
the slope just dropped (o), the new slope (h), and the two carried along
(p and f).  The recurrence for these roles, together with the convention
that the initial step is labelled like a step to the right, determines
every label from the two starting triangles alone.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np


class Slope:
    """A reduced rational slope p/q with q >= 0; infinity is 1/0."""

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not a slope")
            p = 1
        else:
            if q < 0:
                p, q = -p, -q
            g = gcd(abs(p), q)
            p //= g
            q //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("Slope is immutable")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(text), 1)

    def is_infinity(self):
        return self.q == 0

    def value(self):
        """Fraction value; raises on the slope at infinity."""
        if self.q == 0:
            raise ValueError("slope at infinity has no finite value")
        return Fraction(self.p, self.q)

    def __eq__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.p, self.q))

    def __str__(self):
        return "%d/%d" % (self.p, self.q)

    def __repr__(self):
        return "Slope(%s)" % (self,)


def det(s, t):
    return s.p * t.q - t.p * s.q


def is_neighbor(s, t):
    """Farey neighbors: determinant of the coordinate vectors is +-1."""
    return abs(det(s, t)) == 1


def _combine(a, b, sub=False):
    """Vector sum or difference of two slopes, as a normalized Slope."""
    if sub:
        return Slope(a.p - b.p, a.q - b.q)
    return Slope(a.p + b.p, a.q + b.q)


class FareyTriangle:
    """Three mutually neighboring slopes."""

    __slots__ = ("slopes",)

    def __init__(self, a, b, c):
        slopes = (a, b, c)
        if len({(s.p, s.q) for s in slopes}) != 3:
            raise ValueError("triangle needs three distinct slopes")
        for i in range(3):
            for j in range(i + 1, 3):
                if not is_neighbor(slopes[i], slopes[j]):
                    raise ValueError("%s and %s are not Farey neighbors"
                                     % (slopes[i], slopes[j]))
        object.__setattr__(self, "slopes", slopes)

    def __setattr__(self, name, value):
        raise AttributeError("FareyTriangle is immutable")

    def slope_set(self):
        return frozenset(self.slopes)

    def __eq__(self, other):
        if not isinstance(other, FareyTriangle):
            return NotImplemented
        return self.slope_set() == other.slope_set()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __str__(self):
        return "{%s}" % ", ".join(str(s) for s in self.slopes)

    __repr__ = __str__


class Walk:
    """A start triangle, the triangle entered first, and an L/R word."""

    __slots__ = ("t0", "t1", "word")

    def __init__(self, t0, t1, word):
        if not isinstance(t0, FareyTriangle) or not isinstance(t1, FareyTriangle):
            raise TypeError("walk endpoints must be FareyTriangle")
        shared = t0.slope_set() & t1.slope_set()
        if len(shared) != 2:
            raise ValueError("triangles must share exactly one edge, got %s and %s"
                             % (t0, t1))
        word = str(word)
        if any(ch not in "LR" for ch in word):
            raise ValueError("walk word must use only L and R: %r" % (word,))
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "t1", t1)
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Walk is immutable")

    def __str__(self):
        return "%s -> %s word=%s" % (self.t0, self.t1, self.word or "(empty)")


class StepLabels:
    """Role assignment of one walk step: dropped o, new h, carried p and f."""

    __slots__ = ("index", "o", "h", "p", "f")

    def __init__(self, index, o, h, p, f):
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "o", o)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "f", f)

    def __setattr__(self, name, value):
        raise AttributeError("StepLabels is immutable")

    def __str__(self):
        return "step %d: o=%s h=%s p=%s f=%s" % (self.index, self.o, self.h,
                                                 self.p, self.f)

    __repr__ = __str__


def _circular_key(s):
    """Sort key on the circle through all slopes, with 1/0 as the maximum."""
    if s.q == 0:
        return (1, Fraction(0))
    return (0, Fraction(s.p, s.q))


def walk_labels(walk):
    """Labels for steps 0..len(word) of the walk.

    Step 0 drops the slope of t0 absent from t1 and pulls in the slope of
    t1 absent from t0; the two shared slopes get the p and f roles, with p
    taken as the first shared slope encountered going up around the circle
    from h (the right-step convention for the initial step).  Later steps
    permute roles by whether the walk keeps turning the same way, and the
    new slope is always the vector sum or difference of p and f that is
    not the slope being dropped.
    """
    t0set = walk.t0.slope_set()
    t1set = walk.t1.slope_set()
    (o0,) = t0set - t1set
    (h0,) = t1set - t0set
    shared = sorted(t0set & t1set, key=_circular_key)
    kh = _circular_key(h0)
    after = [s for s in shared if _circular_key(s) > kh]
    ordered = after + [s for s in shared if _circular_key(s) <= kh]
    p0, f0 = ordered[0], ordered[1]
    _check_flip(o0, h0, p0, f0)
    labels = [StepLabels(0, o0, h0, p0, f0)]
    prev_letter = "R"
    for k, letter in enumerate(walk.word, start=1):
        prev = labels[-1]
        if letter == prev_letter:
            o, p, f = prev.f, prev.p, prev.h
        else:
            o, p, f = prev.p, prev.f, prev.h
        h = _new_slope(o, p, f)
        labels.append(StepLabels(k, o, h, p, f))
        prev_letter = letter
    return labels


def _check_flip(o, h, p, f):
    cands = {_combine(p, f), _combine(p, f, sub=True)}
    if cands != {o, h}:
        raise ValueError("inconsistent step: %s,%s do not combine to %s and %s"
                         % (p, f, o, h))


def _new_slope(o, p, f):
    plus = _combine(p, f)
    minus = _combine(p, f, sub=True)
    if plus == o:
        h = minus
    elif minus == o:
        h = plus
    else:
        raise ValueError("dropped slope %s is not a combination of %s and %s"
                         % (o, p, f))
    if not (is_neighbor(h, p) and is_neighbor(h, f)):
        raise ValueError("new slope %s fails the neighbor check" % (h,))
    return h


class WordAnatomy:
    """Split of a walk word into body + tail + tip.

    The tip is the last letter, the tail is the maximal constant run
    immediately before it, and the body is whatever precedes the tail.
    The first tail step is step len(body) + 1 of the walk.
    """

    __slots__ = ("word", "body", "tail", "tip", "tail_start_step",
                 "tip_matches_tail")

    def __init__(self, word):
        word = str(word)
        if len(word) < 2:
            raise ValueError("word must have at least two letters: %r" % (word,))
        if any(ch not in "LR" for ch in word):
            raise ValueError("word must use only L and R: %r" % (word,))
        tip = word[-1]
        i = len(word) - 2
        ch = word[i]
        while i > 0 and word[i - 1] == ch:
            i -= 1
        body, tail = word[:i], word[i:-1]
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "tip", tip)
        object.__setattr__(self, "tail_start_step", len(body) + 1)
        object.__setattr__(self, "tip_matches_tail", tip == tail[0])

    def __setattr__(self, name, value):
        raise AttributeError("WordAnatomy is immutable")

    def __str__(self):
        return "%s|%s|%s" % (self.body, self.tail, self.tip)


def anatomy(word):
    return WordAnatomy(word)


# --- crossing counts ---------------------------------------------------------


def crossing_count(s, h):
    """Number of triangulation edges separating two distinct slopes.

    Computed by moving s to infinity with a determinant-1 change of
    coordinates and walking the mediant tree down to the image of h; the
    number of refinement steps is the number of separating edges.
    """
    if not isinstance(s, Slope) or not isinstance(h, Slope):
        raise TypeError("crossing_count expects two Slopes")
    if s == h:
        raise ValueError("crossing count needs two distinct slopes")
    # unimodular map sending s to 1/0: (a, b) -> (u*a + v*b, -q*a + p*b)
    u, v = _bezout(s.p, s.q)
    a = u * h.p + v * h.q
    b = -s.q * h.p + s.p * h.q
    if b < 0:
        a, b = -a, -b
    if b == 0:
        raise ValueError("slopes coincide after reduction")
    if b == 1:
        return 0
    lo = a // b
    lo_p, lo_q = lo, 1
    hi_p, hi_q = lo + 1, 1
    count = 0
    while True:
        mp, mq = lo_p + hi_p, lo_q + hi_q
        count += 1
        cmp = a * mq - mp * b
        if cmp == 0:
            return count
        if cmp < 0:
            hi_p, hi_q = mp, mq
        else:
            lo_p, lo_q = mp, mq


def _bezout(p, q):
    """(u, v) with u*p + v*q == 1 for coprime p, q."""
    old_r, r = p, q
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_u, u = u, old_u - quo * u
        old_v, v = v, old_v - quo * v
    if old_r == -1:
        old_u, old_v = -old_u, -old_v
    return old_u, old_v


def crossing_count_oracle(s, h, bound):
    """Brute-force crossing count: enumerate edges and test separation.

    Every edge of the triangulation whose endpoint entries stay within
    bound in absolute value is generated explicitly; the count is the
    number of such edges with s and h strictly on opposite sides.  The
    bound must dominate the entries of s and h combined, or the result
    could silently miss edges, so that is an error.
    """
    need = abs(s.p) + abs(s.q) + abs(h.p) + abs(h.q)
    if bound < need:
        raise ValueError("bound %d too small: need at least %d" % (bound, need))
    if s == h:
        raise ValueError("crossing count needs two distinct slopes")
    vert_n, fin = _edge_table(bound)

    def inside_finite(x):
        # strictly between the endpoint values of each finite edge
        if x.q == 0:
            return np.zeros(len(fin), dtype=bool)
        ap, aq, bp, bq = fin[:, 0], fin[:, 1], fin[:, 2], fin[:, 3]
        gt_a = x.p * aq - ap * x.q > 0
        lt_b = bp * x.q - x.p * bq > 0
        return gt_a & lt_b

    def on_finite(x):
        ap, aq, bp, bq = fin[:, 0], fin[:, 1], fin[:, 2], fin[:, 3]
        return ((ap == x.p) & (aq == x.q)) | ((bp == x.p) & (bq == x.q))

    sep_fin = inside_finite(s) != inside_finite(h)
    sep_fin &= ~(on_finite(s) | on_finite(h))

    def above_vert(x):
        if x.q == 0:
            return np.zeros(len(vert_n), dtype=bool)
        return x.p > vert_n * x.q

    def on_vert(x):
        if x.q == 0:
            return np.ones(len(vert_n), dtype=bool)
        return (x.q == 1) & (vert_n == x.p)

    sep_vert = above_vert(s) != above_vert(h)
    sep_vert &= ~(on_vert(s) | on_vert(h))
    return int(sep_fin.sum() + sep_vert.sum())


@lru_cache(maxsize=8)
def _edge_table(bound):
    """All triangulation edges with entries within bound.

    Returns (vertical_ns, finite_edges): vertical edges join n/1 to 1/0
    and are stored by their integer n; finite edges are rows
    (ap, aq, bp, bq) with a < b as rationals.
    """
    verts = np.arange(-bound, bound + 1, dtype=np.int64)
    finite = []

    def descend(ap, aq, bp, bq):
        mp, mq = ap + bp, aq + bq
        if abs(mp) > bound or mq > bound:
            return
        finite.append((ap, aq, mp, mq))
        finite.append((mp, mq, bp, bq))
        descend(ap, aq, mp, mq)
        descend(mp, mq, bp, bq)

    for n in range(-bound, bound):
        finite.append((n, 1, n + 1, 1))
        descend(n, 1, n + 1, 1)
    return verts, np.array(finite, dtype=np.int64)
