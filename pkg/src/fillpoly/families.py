"""End-to-end pipelines for the two published knot families.

A FamilySpec bundles everything one family+direction needs: the starting
triangles of the Farey walk, the transcribed equations, the chain order,
the expected tail slopes, the knot-name template and the basis-change
rule.  run_family drives base solve -> chain -> collapsed tail -> filling
expression.  run_family_numeric repeats the whole computation in plain
Fractions at one sample point (different algorithms on purpose: Cramer
instead of elimination for the base, repeated exchange steps instead of
the binomial closed form for the tail) so the two pipelines check each
other.

The twist-knot A-polynomial recurrence lives here too: twist_A generates
the sequences from their seeds and twist_recurrence_check verifies the
three-term product identities that the generated polynomials satisfy.
"""

from fractions import Fraction
import random

from .farey import FareyTriangle, Slope, Walk, anatomy, walk_labels
from .hn import TailContext, filling_poly, iterate_exchange
from .poly import Poly, poly_divides
from .ptolemy import (PVARS, chain_solve, gamma_name, load_equations,
                      solve_pretzel_base, solve_whitehead_base)
from .quadext import QuadExt
from .ratfunc import PoleError, RatFunc, parse_poly, substitute_basis


def _pp(text):
    return parse_poly(text, PVARS)


# Factors worth offering to RatFunc.reduced along the pipeline.  Purely an
# output-size optimization: reduced() only cancels a candidate after exact
# division succeeds on both sides, so the list's content never affects
# values, only how much junk the intermediate fractions carry.  Shared
# monomials are already stripped by normalization, so no bare variables.
REDUCE_CANDIDATES = tuple(_pp(t) for t in (
    "L - 1", "M - 1", "M + 1", "M^2 - 1", "M^2 + 1",
    "L - M", "L + M", "L - M^2", "L + M^2",
    "L^2 - M^3", "L^2 + M^3", "L - M^4", "L + M^4"))


class FamilySpec:
    """Static description of one family and filling direction."""

    __slots__ = ("name", "sign", "eq_file", "triangle0", "triangle1",
                 "body_word", "tail_letter", "step_labels", "tail_slopes",
                 "knot_fmt", "knot_coefs", "basis_sign", "basis_coefs",
                 "twist_link")

    def __init__(self, name, sign, eq_file, triangle0, triangle1, body_word,
                 tail_letter, step_labels, tail_slopes, knot_fmt, knot_coefs,
                 basis_sign, basis_coefs, twist_link=None):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "eq_file", eq_file)
        object.__setattr__(self, "triangle0",
                           FareyTriangle(*(Slope.parse(s) for s in triangle0)))
        object.__setattr__(self, "triangle1",
                           FareyTriangle(*(Slope.parse(s) for s in triangle1)))
        object.__setattr__(self, "body_word", body_word)
        object.__setattr__(self, "tail_letter", tail_letter)
        object.__setattr__(self, "step_labels", tuple(step_labels))
        object.__setattr__(self, "tail_slopes",
                           tuple(Slope.parse(s) for s in tail_slopes))
        object.__setattr__(self, "knot_fmt", knot_fmt)
        object.__setattr__(self, "knot_coefs", knot_coefs)
        object.__setattr__(self, "basis_sign", basis_sign)
        object.__setattr__(self, "basis_coefs", basis_coefs)
        object.__setattr__(self, "twist_link", twist_link)

    def __setattr__(self, name, value):
        raise AttributeError("FamilySpec is immutable")

    def word(self, m):
        """Walk word for tail length m: body, then the tail run and tip."""
        return self.body_word + self.tail_letter * (m + 1)

    def knot_name(self, m):
        a, b = self.knot_coefs
        return self.knot_fmt % (a * m + b)

    def basis_rule(self, m):
        a, b = self.basis_coefs
        return self.basis_sign, a * m + b

    def equations(self):
        return load_equations(self.eq_file)

    def base_assignment(self):
        if self.name == "pretzel238":
            return solve_pretzel_base(self.equations())
        return solve_whitehead_base(self.equations())

    def __repr__(self):
        return "FamilySpec(%s, %s)" % (self.name, self.sign)


FAMILIES = {
    ("pretzel238", "pos"): FamilySpec(
        "pretzel238", "pos", "pretzel238.eqs",
        ("3/1", "4/1", "1/0"), ("3/1", "1/0", "2/1"),
        "LLR", "L",
        ("step0", "step1", "step2", "step3pos"),
        ("1/2", "1/1", "0/1"),
        "T(5,%d,2,2)", (-5, -14),
        1, (-25, -67)),
    ("pretzel238", "neg"): FamilySpec(
        "pretzel238", "neg", "pretzel238.eqs",
        ("3/1", "4/1", "1/0"), ("3/1", "1/0", "2/1"),
        "LLL", "R",
        ("step0", "step1", "step2", "step3neg"),
        ("-1/1", "1/0", "0/1"),
        "T(5,%d,2,2)", (5, 11),
        1, (25, 58)),
    ("whitehead", "pos"): FamilySpec(
        "whitehead", "pos", "whitehead.eqs",
        ("3/1", "2/1", "1/0"), ("2/1", "1/0", "1/1"),
        "LR", "L",
        ("step0", "step1", "step2pos"),
        ("1/2", "1/1", "0/1"),
        "J(2,%d)", (2, 6),
        -1, (0, -2),
        twist_link=(3, "pos")),
    ("whitehead", "neg"): FamilySpec(
        "whitehead", "neg", "whitehead.eqs",
        ("3/1", "2/1", "1/0"), ("2/1", "1/0", "1/1"),
        "LL", "R",
        ("step0", "step1", "step2neg"),
        ("-1/1", "1/0", "0/1"),
        "J(2,%d)", (-2, -4),
        -1, (0, -2),
        twist_link=(2, "neg")),
}


def get_family(name, sign):
    try:
        return FAMILIES[(name, sign)]
    except KeyError:
        raise ValueError("unknown family %r with sign %r (have: %s)"
                         % (name, sign,
                            ", ".join("%s/%s" % k for k in sorted(FAMILIES)))) from None


class FillingResult:
    """Output of one run: the filling expression plus its derived forms."""

    __slots__ = ("family", "sign", "m", "expression", "conjugate_product",
                 "knot", "basis_changed")

    def __init__(self, family, sign, m, expression, conjugate_product, knot,
                 basis_changed):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "expression", expression)
        object.__setattr__(self, "conjugate_product", conjugate_product)
        object.__setattr__(self, "knot", knot)
        object.__setattr__(self, "basis_changed", basis_changed)

    def __setattr__(self, name, value):
        raise AttributeError("FillingResult is immutable")

    def __repr__(self):
        return "FillingResult(%s/%s, m=%d, %s)" % (
            self.family, self.sign, self.m, self.knot)


def _rational_part(value, role):
    """Unwrap a rational QuadExt back to RatFunc; reject mixed values."""
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, QuadExt) and value.is_rational():
        return value.a
    raise ValueError("the %s value must be rational, got %s" % (role, value))


def run_family(spec, m):
    """Full pipeline for one filling: base solve, chain, collapsed tail.

    m is the tail length (m >= 1); the walk word is the spec's body plus
    m+1 copies of the tail letter, so the tip always continues the run.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer tail length")
    word = spec.word(m)
    wa = anatomy(word)
    assert len(wa.tail) == m and wa.tip_matches_tail
    labels = walk_labels(Walk(spec.triangle0, spec.triangle1, word))
    eqs = spec.equations()
    step_eqs = {k: eqs[label] for k, label in enumerate(spec.step_labels)}
    upto = wa.tail_start_step - 1
    assert upto == len(spec.step_labels) - 1
    asg = chain_solve(labels, step_eqs, spec.base_assignment(), upto)
    tail = labels[wa.tail_start_step]
    assert (tail.f, tail.o, tail.p) == spec.tail_slopes
    f = _rational_part(asg.value(gamma_name(tail.f)), "tail-f").reduced(REDUCE_CANDIDATES)
    o = _rational_part(asg.value(gamma_name(tail.o)), "tail-o").reduced(REDUCE_CANDIDATES)
    p = asg.value(gamma_name(tail.p))
    if isinstance(p, RatFunc):
        p = p.reduced(REDUCE_CANDIDATES)
    elif isinstance(p, QuadExt):
        p = QuadExt(p.a.reduced(REDUCE_CANDIDATES),
                    p.b.reduced(REDUCE_CANDIDATES),
                    p.rad.reduced(REDUCE_CANDIDATES))
    ctx = TailContext(f, o, p, m, tip_matches_tail=wa.tip_matches_tail)
    expr = filling_poly(ctx, reduce_candidates=REDUCE_CANDIDATES)
    if isinstance(expr, QuadExt):
        conj = expr.conj_product().reduced(REDUCE_CANDIDATES)
    else:
        conj = expr
    changed = substitute_basis(conj, *spec.basis_rule(m))
    return FillingResult(spec.name, spec.sign, m, expr, conj,
                         spec.knot_name(m), changed)


def basis_change(result, spec):
    """The spec's basis change applied to the run's conjugate product."""
    return substitute_basis(result.conjugate_product, *spec.basis_rule(result.m))


# --- the independent numeric pipeline -------------------------------------


def _numeric_terms(eq, point):
    return [(c.eval_at(point), gammas) for c, gammas in eq.terms]


def _numeric_pretzel_base(eqs, point):
    """Base values at one point, by a 2x2 Cramer solve in (s*w, w).

    Deliberately a different algorithm from the symbolic base solver.  The
    two head equations, with the 3/1 value set to 1, only involve the
    products s*w, w and a constant, where s is the 1/0 value and w the 4/1
    value.  Singular points raise PoleError so the caller can resample.
    """
    one = Fraction(1)
    vals = {"g_3/1": one}
    rows = []
    for label in ("tet0", "tet1"):
        a = b = c = Fraction(0)
        for coef, (x, y) in _numeric_terms(eqs[label], point):
            pair = frozenset((x, y))
            if pair == frozenset(("g_1/0", "g_4/1")):
                a += coef
            elif pair == frozenset(("g_4/1", "g_3/1")):
                b += coef
            elif pair == frozenset(("g_3/1",)):
                c += coef
            else:
                raise ValueError("unexpected term %s*%s in %s" % (x, y, label))
        rows.append((a, b, c))
    (a1, b1, c1), (a2, b2, c2) = rows
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise PoleError("singular base system at this point")
    u = (b1 * c2 - b2 * c1) / det    # u = s * w
    w = (a2 * c1 - a1 * c2) / det
    if w == 0:
        raise PoleError("vanishing 4/1 value at this point")
    vals["g_4/1"] = w
    vals["g_1/0"] = u / w
    for label in ("tet0", "tet1"):
        total = Fraction(0)
        for coef, (x, y) in _numeric_terms(eqs[label], point):
            total += coef * vals[x] * vals[y]
        if total != 0:
            raise ArithmeticError("numeric base solve left a residual")
    return vals


def _numeric_linear_step(terms, vals, unknown):
    lin = Fraction(0)
    const = Fraction(0)
    for coef, (x, y) in terms:
        hits = (x == unknown) + (y == unknown)
        if hits == 2:
            raise ValueError("%s appears squared" % (unknown,))
        if hits == 1:
            other = y if x == unknown else x
            lin += coef * vals[other]
        else:
            const += coef * vals[x] * vals[y]
    if lin == 0:
        raise PoleError("vanishing linear coefficient at this point")
    return -const / lin


def run_family_numeric(spec, m, point):
    """The whole pipeline in plain Fractions at one (L, M) point.

    Only rational chains are supported (the pretzel family); the tail is
    collapsed by actually iterating exchange steps rather than through the
    closed form.  Raises PoleError at singular points.
    """
    if spec.name != "pretzel238":
        raise ValueError("the numeric pipeline supports rational chains only")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer tail length")
    eqs = spec.equations()
    word = spec.word(m)
    wa = anatomy(word)
    labels = walk_labels(Walk(spec.triangle0, spec.triangle1, word))
    vals = _numeric_pretzel_base(eqs, point)
    for k, label in enumerate(spec.step_labels):
        unknown = gamma_name(labels[k].h)
        vals[unknown] = _numeric_linear_step(
            _numeric_terms(eqs[label], point), vals, unknown)
    tail = labels[wa.tail_start_step]
    f = vals[gamma_name(tail.f)]
    o = vals[gamma_name(tail.o)]
    p = vals[gamma_name(tail.p)]
    collapsed = iterate_exchange(f, o, p, m)
    return (collapsed - p) * f ** (m - 1) * o ** m


def random_rational_point(rng):
    """A small random rational (L, M) pair with nonzero entries."""
    def pick():
        num = rng.choice([n for n in range(-9, 10) if n])
        den = rng.randint(1, 4)
        return Fraction(num, den)
    return {"L": pick(), "M": pick()}


def numeric_agreement(spec, m, count, seed, result=None):
    """Symbolic vs numeric pipeline at `count` non-singular sample points."""
    if result is None:
        result = run_family(spec, m)
    expr = result.expression
    if isinstance(expr, QuadExt):
        raise ValueError("numeric agreement is defined for rational results only")
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        point = random_rational_point(rng)
        try:
            symbolic = expr.evaluate(point)
            numeric = run_family_numeric(spec, m, point)
        except (PoleError, ZeroDivisionError):
            continue
        if symbolic != numeric:
            return False
        checked += 1
    return True


# --- twist-knot A-polynomial recurrences -----------------------------------


_X_TEXT = ("-L + L^2 + 2*L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + 2*L*M^6"
           " + M^8 - L*M^8")
_Y_TEXT = "M^4 * (L + M^2)^4"
_Z_TEXT = "L * (M^2 - 1)^3 * (M^2 + 1)^2 * (L - M^4)"
_A1_POS_TEXT = "L + M^6"
_A2_POS_TEXT = ("-L^2 + L^3 + 2*L^2*M^2 + L*M^4 + 2*L^2*M^4 - L*M^6"
                " - L^2*M^8 + 2*L*M^10 + L^2*M^10 + 2*L*M^12 + M^14"
                " - L*M^14")
_A1_NEG_TEXT = "-L + L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + L*M^6 - L*M^8"


class TwistPolys:
    """The twist-knot sequences and their recurrence data.

    Both sequences obey  A_n = x*A_(n-1) - y*A_(n-2); the positive one is
    seeded at n=1,2 and the negative one at n=0,1.  Generated terms are
    cached on the instance.
    """

    def __init__(self):
        self.x = _pp(_X_TEXT)
        self.y = _pp(_Y_TEXT)
        self.z = _pp(_Z_TEXT)
        self._pos = [_pp(_A1_POS_TEXT), _pp(_A2_POS_TEXT)]   # index n-1
        self._neg = [Poly.one(PVARS), _pp(_A1_NEG_TEXT)]     # index n

    def a_pos(self, n):
        if n < 1:
            raise ValueError("positive sequence starts at n=1")
        while len(self._pos) < n:
            self._pos.append(self.x * self._pos[-1] - self.y * self._pos[-2])
        return self._pos[n - 1]

    def a_neg(self, n):
        if n < 0:
            raise ValueError("negative sequence starts at n=0")
        while len(self._neg) <= n:
            self._neg.append(self.x * self._neg[-1] - self.y * self._neg[-2])
        return self._neg[n]


_TWIST = None


def twist_polys():
    global _TWIST
    if _TWIST is None:
        _TWIST = TwistPolys()
    return _TWIST


def twist_A(n, sign):
    """n-th twist-knot A-polynomial: sign 'pos' for J(2,2n), 'neg' for J(2,-2n)."""
    tw = twist_polys()
    if sign == "pos":
        return tw.a_pos(n)
    if sign == "neg":
        return tw.a_neg(n)
    raise ValueError("sign must be 'pos' or 'neg'")


def twist_gap(sign, n):
    """Right side of the product identity: y^k * z * (extra factor)."""
    tw = twist_polys()
    if sign == "pos":
        if n < 2:
            raise ValueError("positive identity needs n > 1")
        return tw.y ** (n - 2) * tw.z * _pp("M^4 * (L + M^2)^3")
    if sign == "neg":
        if n < 1:
            raise ValueError("negative identity needs n > 0")
        return tw.y ** (n - 1) * tw.z * _pp("L + M^2")
    raise ValueError("sign must be 'pos' or 'neg'")


def twist_recurrence_check(n, sign):
    """Does A_(n-1) * A_(n+1) == A_n^2 + the sign's gap term, exactly?"""
    lhs = twist_A(n - 1, sign) * twist_A(n + 1, sign)
    rhs = twist_A(n, sign) ** 2 + twist_gap(sign, n)
    return lhs == rhs


def twist_base_identity_check(sign):
    """The proof's seed identity: x*A_a*A_b - y*A_a^2 - A_b^2 == gap seed."""
    tw = twist_polys()
    if sign == "pos":
        a, b = twist_A(1, "pos"), twist_A(2, "pos")
        target = tw.z * _pp("M^4 * (L + M^2)^3")
    elif sign == "neg":
        a, b = twist_A(0, "neg"), twist_A(1, "neg")
        target = tw.z * _pp("L + M^2")
    else:
        raise ValueError("sign must be 'pos' or 'neg'")
    return tw.x * a * b - tw.y * a * a - b * b == target


# --- the divisibility bridge between the two pipelines ----------------------


def _unit_normal(p):
    """Strip monomial and integer content; make the leading coefficient positive."""
    if p.is_zero():
        raise ValueError("zero polynomial has no unit-normal form")
    p = p.shift_down(p.monomial_content())
    _, p = p.primitive()
    lead = p.terms[max(p.terms)]
    if (lead if isinstance(lead, int) else lead.numerator) < 0:
        p = -p
    return p


def twist_divisor(spec, m):
    """Normalized twist polynomial expected inside the basis-changed output."""
    if spec.twist_link is None:
        raise ValueError("family %s/%s has no twist-knot divisor"
                         % (spec.name, spec.sign))
    offset, tsign = spec.twist_link
    return _unit_normal(twist_A(m + offset, tsign))


def divides_conjugate(spec, m, result=None):
    """Does the twist polynomial divide the basis-changed conjugate product?

    The family's basis change carries the conjugate product into the frame
    the twist-knot sequences are written in; the comparison is up to
    monomial content, integer content and sign on both sides.  Because the
    basis change is an invertible monomial substitution, checking the same
    statement with the inverse substitution applied to the divisor instead
    gives the same verdict.
    """
    if result is None:
        result = run_family(spec, m)
    divisor = twist_divisor(spec, m)
    target = _unit_normal(result.basis_changed.num)
    ok, _ = poly_divides(divisor, target)
    return ok
