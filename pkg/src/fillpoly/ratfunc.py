"""Rational functions as normalized fractions of sparse polynomials.

A RatFunc keeps a numerator and denominator Poly over the same variable
table.  Normalization is deliberately light: common monomial factors and
rational content are stripped, coefficients are scaled to be integers with
no common factor across the pair, and the denominator's leading
coefficient is made positive.  No full multivariate gcd is computed, so a
common non-monomial factor can survive; equality therefore always goes
through cross-multiplication.

Multiplication and division try exact cross-cancellation through
poly_divides first.  That keeps the iterated exchange of the tail
construction fully reduced, where the denominators must stay plain
monomials.
"""

from fractions import Fraction

from .poly import Poly, poly_divides


class PoleError(ArithmeticError):
    """Raised when evaluating a rational function where its denominator vanishes."""


class RatFunc:
    """Quotient of two Polys over a shared variable table."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if not isinstance(num, Poly):
            raise TypeError("numerator must be a Poly")
        if den is None:
            den = Poly.one(num.vars)
        if not isinstance(den, Poly):
            raise TypeError("denominator must be a Poly")
        num._check_same_vars(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # --- constructors ---------------------------------------------------

    @classmethod
    def const(cls, vars, value):
        value = Fraction(value)
        return cls(Poly.const(vars, value.numerator),
                   Poly.const(vars, value.denominator))

    @classmethod
    def zero(cls, vars):
        return cls(Poly.zero(vars))

    @classmethod
    def one(cls, vars):
        return cls(Poly.one(vars))

    @classmethod
    def variable(cls, vars, name):
        return cls(Poly.variable(vars, name))

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    # --- views ------------------------------------------------------------

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return Fraction(self.num.constant_value()) / Fraction(self.den.constant_value())

    def is_poly(self):
        return self.den.is_one()

    # --- promotion --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.vars, other)
        return None

    # --- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num is other.num and self.den is other.den:
            return True
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        ok, q = poly_divides(self.den, other.den)
        if ok:
            return RatFunc(self.num * q + other.num, other.den)
        ok, q = poly_divides(other.den, self.den)
        if ok:
            return RatFunc(self.num + other.num * q, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if n1.is_zero() or n2.is_zero():
            return RatFunc.zero(self.vars)
        # cross-cancel before multiplying; this is what keeps chained
        # exchanges reduced instead of piling up matched factors
        if not d2.is_one() and not d2.is_constant():
            ok, q = poly_divides(d2, n1)
            if ok:
                n1, d2 = q, Poly.one(self.vars)
        if not d1.is_one() and not d1.is_constant():
            ok, q = poly_divides(d1, n2)
            if ok:
                n2, d1 = q, Poly.one(self.vars)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("RatFunc exponent must be int")
        if n < 0:
            return self.reciprocal() ** (-n)
        if n == 0:
            return RatFunc.one(self.vars)
        return RatFunc(self.num ** n, self.den ** n, _normalized=True)

    # --- extra reduction ---------------------------------------------------

    def reduced(self, candidates):
        """Cancel every candidate polynomial that divides both sides.

        Normalization does no multivariate gcd, so pipelines that know
        which factors tend to appear pass them here to keep results small.
        Value-preserving in all cases.
        """
        num, den = self.num, self.den
        changed = False
        for cand in candidates:
            if cand.is_constant():
                continue
            while not num.is_zero():
                ok_n, qn = poly_divides(cand, num)
                if not ok_n:
                    break
                ok_d, qd = poly_divides(cand, den)
                if not ok_d:
                    break
                num, den = qn, qd
                changed = True
        if not changed:
            return self
        return RatFunc(num, den)

    # --- evaluation ----------------------------------------------------------

    def evaluate(self, point):
        """Exact Fraction value at a point dict; PoleError on a vanishing den."""
        d = self.den.eval_at(point)
        if d == 0:
            raise PoleError("denominator vanishes at %r" % (point,))
        return self.num.eval_at(point) / d

    # --- rendering --------------------------------------------------------

    def __str__(self):
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFunc(%s)" % (self,)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _normalize(num, den):
    """Shared-monomial strip, content normalization, den sign convention."""
    if num.is_zero():
        return num, Poly.one(num.vars)
    mn = num.monomial_content()
    md = den.monomial_content()
    shift = tuple(min(a, b) for a, b in zip(mn, md))
    if any(shift):
        num = num.shift_down(shift)
        den = den.shift_down(shift)
    cn, pn = num.primitive()
    cd, pd = den.primitive()
    ratio = cn / cd
    num = pn * ratio.numerator
    den = pd * ratio.denominator
    _, lead = den.leading_term()
    if lead < 0:
        num, den = -num, -den
    return num, den


# --- basis change -----------------------------------------------------------


def substitute_basis(rf, sign, e, lname="L", mname="M"):
    """Apply the monomial basis change  lname -> sign * lname * mname**e.

    sign must be +1 or -1; e may be negative.  Negative powers of mname
    produced by the substitution are cleared by the smallest value-preserving
    power of mname applied to numerator and denominator together.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    vars = rf.vars
    li = vars.index(lname)
    mi = vars.index(mname)
    mapped_num = _subst_terms(rf.num, sign, e, li, mi)
    mapped_den = _subst_terms(rf.den, sign, e, li, mi)
    low = min((exps[mi] for exps in list(mapped_num) + list(mapped_den)),
              default=0)
    lift = -low if low < 0 else 0
    num = _lift_m(mapped_num, mi, lift, vars)
    den = _lift_m(mapped_den, mi, lift, vars)
    return RatFunc(num, den)


def substitute_basis_poly(p, sign, e, lname="L", mname="M"):
    """Poly-level basis change; clears negative powers by a power of mname."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    vars = p.vars
    li = vars.index(lname)
    mi = vars.index(mname)
    mapped = _subst_terms(p, sign, e, li, mi)
    low = min((exps[mi] for exps in mapped), default=0)
    lift = -low if low < 0 else 0
    return _lift_m(mapped, mi, lift, vars)


def _subst_terms(p, sign, e, li, mi):
    out = {}
    for exps, c in p.terms.items():
        k = exps[li]
        ne = list(exps)
        ne[mi] = exps[mi] + e * k
        if sign < 0 and k % 2:
            c = -c
        out[tuple(ne)] = c
    return out


def _lift_m(terms, mi, lift, vars):
    if lift:
        shifted = {}
        for exps, c in terms.items():
            ne = list(exps)
            ne[mi] += lift
            shifted[tuple(ne)] = c
        terms = shifted
    return Poly(vars, terms)


# --- parsing -----------------------------------------------------------------
#
# One small recursive-descent parser covers all the textual inputs in the
# package: transcribed fixtures in factored form (possibly with negative
# powers), polynomial constants, and test expressions.  Grammar, loosest
# binding first:
#
#   expr   := term (('+'|'-') term)*
#   term   := unary (('*'|'/')? unary)*        adjacency multiplies
#   unary  := '-' unary | power
#   power  := atom ('^' '-'? INT)?
#   atom   := '(' expr ')' | NAME | INT
#
# Variables must belong to the declared table; anything else is an error.


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", text[i:j]))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("NAME", text[i:j]))
            i = j
            continue
        if ch in "+-*/^()":
            toks.append(("OP", ch))
            i += 1
            continue
        raise ValueError("unexpected character %r in %r" % (ch, text))
    toks.append(("END", ""))
    return toks


class _Parser:
    def __init__(self, text, vars):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.vars = tuple(vars)

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, val = self.next()
        if kind != "OP" or val != ch:
            raise ValueError("expected %r in %r" % (ch, self.text))

    def parse(self):
        result = self.expr()
        if self.peek()[0] != "END":
            raise ValueError("trailing input in %r" % (self.text,))
        return result

    def expr(self):
        result = self.term()
        while True:
            kind, val = self.peek()
            if kind == "OP" and val in "+-":
                self.next()
                rhs = self.term()
                result = result + rhs if val == "+" else result - rhs
            else:
                return result

    def term(self):
        result = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "OP" and val in "*/":
                self.next()
                rhs = self.unary()
                result = result * rhs if val == "*" else result / rhs
            elif kind in ("NAME", "INT") or (kind == "OP" and val == "("):
                result = result * self.unary()
            else:
                return result

    def unary(self):
        kind, val = self.peek()
        if kind == "OP" and val == "-":
            self.next()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "OP" and val == "^":
            self.next()
            neg = False
            kind, val = self.next()
            if kind == "OP" and val == "-":
                neg = True
                kind, val = self.next()
            if kind != "INT":
                raise ValueError("bad exponent in %r" % (self.text,))
            exp = int(val)
            return base ** (-exp if neg else exp)
        return base

    def atom(self):
        kind, val = self.next()
        if kind == "OP" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "NAME":
            if val not in self.vars:
                raise ValueError("unknown variable %r (table is %r)"
                                 % (val, self.vars))
            return RatFunc.variable(self.vars, val)
        if kind == "INT":
            return RatFunc.const(self.vars, int(val))
        raise ValueError("unexpected token %r in %r" % (val, self.text))


def parse_ratfunc(text, vars):
    """Parse an expression (negative powers and '/' allowed) into a RatFunc."""
    return _Parser(text, vars).parse()


def parse_poly(text, vars):
    """Parse an expression that must reduce to a polynomial into a Poly."""
    rf = parse_ratfunc(text, vars)
    if not rf.den.is_constant():
        raise ValueError("expression %r is not a polynomial" % (text,))
    c = rf.den.constant_value()
    if c == 1:
        return rf.num
    return rf.num * Fraction(1, c)
