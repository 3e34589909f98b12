"""Sparse multivariate polynomials with exact rational coefficients.

A Poly owns an ordered tuple of variable names (the variable table) and a
dict mapping exponent tuples to nonzero coefficients.  Coefficients are
plain Python ints whenever they are integral and fractions.Fraction
otherwise, so all arithmetic is exact.  The monomial order is
lexicographic in the variable order; it fixes the canonical text form and
the sign convention used by RatFunc.

Exponents are never negative here.  Expressions with negative powers live
one level up, in RatFunc.
"""

from fractions import Fraction
from math import gcd

try:
    from gmpy2 import mpz as _mpz
except ImportError:
    _mpz = None

# Thresholds for switching dict-based multiplication over to packed
# big-integer (Kronecker substitution) multiplication.
_PACK_MIN_WORK = 20000
_PACK_MAX_SLOTS = 4_000_000


def _clean_coef(c):
    """Collapse integral Fractions to int; leave everything else alone."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Sparse exact polynomial in a fixed ordered set of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        vars = tuple(vars)
        nv = len(vars)
        if len(set(vars)) != nv:
            raise ValueError("duplicate variable names: %r" % (vars,))
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = _clean_coef(c)
                if not c:
                    continue
                exps = tuple(exps)
                if len(exps) != nv:
                    raise ValueError("exponent tuple %r does not match %d variables"
                                     % (exps, nv))
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent in %r" % (exps,))
                clean[exps] = c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # --- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, vars, terms):
        """Internal: wrap an already-clean term dict without re-validating."""
        self = object.__new__(cls)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, value):
        if not isinstance(value, int):
            value = _clean_coef(Fraction(value))
        if not value:
            return cls(vars, {})
        return cls(vars, {(0,) * len(tuple(vars)): value})

    @classmethod
    def one(cls, vars):
        return cls.const(vars, 1)

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        if name not in vars:
            raise ValueError("unknown variable %r (table is %r)" % (name, vars))
        exps = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {exps: 1})

    @classmethod
    def monomial(cls, vars, exps, coef=1):
        return cls(vars, {tuple(exps): coef})

    # --- predicates and views -----------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * len(self.vars): 1}

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        """The value of a constant polynomial, as int or Fraction."""
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def is_monomial(self):
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def degree_in(self, name):
        """Largest exponent of one variable (zero poly has degree 0 here)."""
        i = self.vars.index(name)
        return max((exps[i] for exps in self.terms), default=0)

    def max_degrees(self):
        """Componentwise maximum exponent vector."""
        nv = len(self.vars)
        degs = [0] * nv
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > degs[i]:
                    degs[i] = e
        return tuple(degs)

    def leading_term(self):
        """(exponents, coefficient) of the lex-largest monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def sorted_terms(self):
        """Terms in descending lex order (the canonical print order)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    # --- arithmetic -----------------------------------------------------

    def _check_same_vars(self, other):
        if self.vars != other.vars:
            raise ValueError("variable tables differ: %r vs %r"
                             % (self.vars, other.vars))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.__eq__(Poly.const(self.vars, other))
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_vars(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = _clean_coef(out.get(exps, 0) + c)
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Poly(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _clean_coef(other if isinstance(other, int) else Fraction(other))
            if not other:
                return Poly.zero(self.vars)
            return Poly._raw(self.vars,
                             {e: _clean_coef(c * other) for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_vars(other)
        if not self.terms or not other.terms:
            return Poly.zero(self.vars)
        if len(self.terms) * len(other.terms) >= _PACK_MIN_WORK:
            packed = _packed_mul(self, other)
            if packed is not None:
                return packed
        return self._mul_dict(other)

    __rmul__ = __mul__

    def _mul_dict(self, other):
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Poly(self.vars, out)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly exponent must be a non-negative integer")
        result = Poly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # --- content and monomial normalization ------------------------------

    def content(self):
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                num_gcd = gcd(num_gcd, c.numerator)
                den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
            else:
                num_gcd = gcd(num_gcd, c)
        return Fraction(num_gcd, den_lcm)

    def primitive(self):
        """(content, primitive part): prim has coprime integer coefficients."""
        c = self.content()
        if not c:
            return Fraction(0), self
        if c == 1:
            return c, self
        if c.denominator == 1:
            k = c.numerator
            terms = {e: coef // k if isinstance(coef, int) else _clean_coef(coef / k)
                     for e, coef in self.terms.items()}
        else:
            inv = 1 / c
            terms = {e: _clean_coef(coef * inv) for e, coef in self.terms.items()}
        return c, Poly._raw(self.vars, terms)

    def monomial_content(self):
        """Componentwise minimum exponent vector over all terms."""
        if not self.terms:
            return (0,) * len(self.vars)
        it = iter(self.terms)
        mins = list(next(it))
        for exps in it:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    def shift_down(self, shift):
        """Divide by the monomial with the given exponent vector (must divide)."""
        out = {}
        for exps, c in self.terms.items():
            nexps = tuple(e - s for e, s in zip(exps, shift))
            if any(e < 0 for e in nexps):
                raise ValueError("monomial %r does not divide all terms" % (shift,))
            out[nexps] = c
        return Poly._raw(self.vars, out)

    # --- evaluation ------------------------------------------------------

    def eval_at(self, point):
        """Exact value at a point, given as a dict varname -> Fraction/int.

        Works in plain integers over one common denominator (numerator and
        denominator power tables per variable), which is much faster than
        Fraction arithmetic per term on big polynomials.
        """
        for v in self.vars:
            if v not in point:
                raise ValueError("no value for variable %r" % (v,))
        if not self.terms:
            return Fraction(0)
        values = [Fraction(point[v]) for v in self.vars]
        degs = self.max_degrees()
        numpows = []
        codenpows = []
        for x, dg in zip(values, degs):
            a, b = x.numerator, x.denominator
            na = [1] * (dg + 1)
            nb = [1] * (dg + 1)
            for i in range(1, dg + 1):
                na[i] = na[i - 1] * a
                nb[i] = nb[i - 1] * b
            numpows.append(na)
            # nb[i] is b^i; the cofactor for exponent e is b^(dg-e)
            codenpows.append(nb)
        common_den = 1
        for nb, dg in zip(codenpows, degs):
            common_den *= nb[dg]
        total = 0
        extra = Fraction(0)
        for exps, c in self.terms.items():
            t = 1
            for i, e in enumerate(exps):
                t *= numpows[i][e] * codenpows[i][degs[i] - e]
            if isinstance(c, int):
                total += c * t
            else:
                extra += c * t
        result = Fraction(total, common_den)
        if extra:
            result += extra / common_den
        return result

    # --- rendering -------------------------------------------------------

    @staticmethod
    def _coef_str(c):
        if isinstance(c, Fraction):
            return "%d/%d" % (c.numerator, c.denominator)
        return str(c)

    def _term_str(self, exps, coef):
        factors = []
        for v, e in zip(self.vars, exps):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append("%s^%d" % (v, e))
        if not factors:
            return self._coef_str(abs(coef))
        mono = "*".join(factors)
        a = abs(coef)
        if a == 1:
            return mono
        return "%s*%s" % (self._coef_str(a), mono)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (exps, coef) in enumerate(self.sorted_terms()):
            neg = coef < 0
            body = self._term_str(exps, coef)
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Poly(%s)" % (self,)

    def to_json(self):
        """JSON-ready dict: variables plus terms in canonical order."""
        return {
            "vars": list(self.vars),
            "terms": [{"coef": self._coef_str(c), "exps": list(e)}
                      for e, c in self.sorted_terms()],
        }


# --- exact division ------------------------------------------------------
#
# poly_divides tests exact divisibility by recursive univariate division in
# the last variable: write both polynomials in the last variable with
# coefficients in the remaining ones, then repeatedly divide leading
# coefficients (recursively, exactly).  Over an integral domain the leading
# coefficient of a product is the product of leading coefficients, so every
# intermediate division must succeed when the division is exact; any failed
# coefficient division or degree drop proves non-divisibility.
#
# Both operands are scaled to primitive integer polynomials first.  A
# primitive integer polynomial divides another over the rationals exactly
# when it divides it over the integers (Gauss), so the scalar base case is
# integer divmod with a zero-remainder check and the whole recursion stays
# in integer arithmetic.  The rational contents rejoin at the end as a
# constant factor on the quotient.


def poly_divides(d, p):
    """Does d exactly divide p?  Returns (flag, quotient or None).

    d must be nonzero.  The quotient, when it exists, satisfies
    p == quotient * d exactly; its coefficients may be non-integer
    rationals even when d and p have integer coefficients.
    """
    if not isinstance(d, Poly) or not isinstance(p, Poly):
        raise TypeError("poly_divides expects two Poly arguments")
    d._check_same_vars(p)
    if d.is_zero():
        raise ZeroDivisionError("zero divisor in poly_divides")
    if p.is_zero():
        return True, Poly.zero(p.vars)
    if len(d.terms) == 1:
        (dexps, dc), = d.terms.items()
        out = {}
        for exps, c in p.terms.items():
            nexps = tuple(a - b for a, b in zip(exps, dexps))
            if any(e < 0 for e in nexps):
                return False, None
            out[nexps] = _div_coef(c, dc)
        return True, Poly(p.vars, out)
    # a quotient would force componentwise bounds on both extreme exponents
    if any(a > b for a, b in zip(d.max_degrees(), p.max_degrees())):
        return False, None
    if any(a > b for a, b in zip(d.monomial_content(), p.monomial_content())):
        return False, None
    cd, dprim = d.primitive()
    cp, pprim = p.primitive()
    if dprim.terms == pprim.terms:
        return True, Poly.const(p.vars, cp / cd)
    # evaluation screens at all-ones and all-minus-ones: for primitive
    # operands the quotient is an integer polynomial, so the divisor's
    # value must divide the dividend's value at any integer point
    s_d = s_p = a_d = a_p = 0
    for exps, c in dprim.terms.items():
        s_d += c
        a_d = a_d - c if sum(exps) & 1 else a_d + c
    for exps, c in pprim.terms.items():
        s_p += c
        a_p = a_p - c if sum(exps) & 1 else a_p + c
    if s_d and s_p % s_d:
        return False, None
    if a_d and a_p % a_d:
        return False, None
    nv = len(p.vars)
    q = _rec_divide(_to_rec(pprim.terms, nv), _to_rec(dprim.terms, nv), nv)
    if q is None:
        return False, None
    qterms = {}
    _rec_collect(q, nv, [], qterms)
    quotient = Poly._raw(p.vars, qterms)
    scale = cp / cd
    if scale != 1:
        quotient = quotient * scale
    return True, quotient


def _div_coef(a, b):
    return _clean_coef(Fraction(a) / Fraction(b))


# Recursive dense representation: a polynomial in k variables is a list
# indexed by the exponent of the LAST variable, whose entries are
# representations in the first k-1 variables; the base case (k == 0) is a
# bare scalar.  Zero entries inside lists are the int 0.  Everything below
# runs on primitive integer operands, so all scalars here are ints; the
# one-variable layer gets dedicated flat-list code because the division
# loop spends nearly all its time there.


def _to_rec(terms, nv):
    if nv == 0:
        return terms.get((), 0)
    groups = {}
    for exps, c in terms.items():
        groups.setdefault(exps[nv - 1], {})[exps[:nv - 1]] = c
    if not groups:
        return []
    out = [0] * (max(groups) + 1)
    for e, sub in groups.items():
        out[e] = _to_rec(sub, nv - 1)
    return out


def _is_zero_rec(c):
    if isinstance(c, list):
        return all(_is_zero_rec(x) for x in c)
    return not c


def _trim(r):
    while r and _is_zero_rec(r[-1]):
        r.pop()
    return r


def _as_level(c, nv):
    """Coerce an entry to the shape expected at recursion depth nv."""
    if nv == 0:
        if isinstance(c, list):
            return c[0] if c else 0
        return c
    if isinstance(c, list):
        return c
    return [c] if c else []


# one-variable layer: plain lists of ints

_MUL1_PACK_MIN = 1024


def _add1(a, b):
    la, lb = len(a), len(b)
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    out = list(a)
    for i in range(lb):
        out[i] += b[i]
    while out and not out[-1]:
        out.pop()
    return out


def _sub1(a, b):
    la, lb = len(a), len(b)
    out = list(a) + [0] * (lb - la) if lb > la else list(a)
    for i in range(lb):
        if b[i]:
            out[i] -= b[i]
    while out and not out[-1]:
        out.pop()
    return out


def _mul1(a, b):
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    if la == 1:
        ca = a[0]
        return [ca * cb for cb in b]
    if lb == 1:
        cb = b[0]
        return [ca * cb for ca in a]
    if la * lb >= _MUL1_PACK_MIN:
        return _mul1_packed(a, b)
    out = [0] * (la + lb - 1)
    for i in range(la):
        ca = a[i]
        if not ca:
            continue
        for j in range(lb):
            if b[j]:
                out[i + j] += ca * b[j]
    return out


def _mul1_packed(a, b):
    """Flat-list convolution through one big-integer product."""
    maxa = max(map(abs, a))
    maxb = max(map(abs, b))
    bound = min(len(a), len(b)) * maxa * maxb
    bits = ((bound.bit_length() + 2 + 7) // 8) * 8
    nbytes = bits // 8
    half = 1 << (bits - 1)
    half_bytes = half.to_bytes(nbytes, "little")

    def encode(xs):
        buf = bytearray(half_bytes * len(xs))
        for i, c in enumerate(xs):
            if c:
                buf[i * nbytes:(i + 1) * nbytes] = (c + half).to_bytes(nbytes, "little")
        return int.from_bytes(buf, "little") - int.from_bytes(half_bytes * len(xs), "little")

    na = encode(a)
    nb = encode(b)
    if _mpz is not None:
        prod = int(_mpz(na) * _mpz(nb))
    else:
        prod = na * nb
    slots = len(a) + len(b) - 1
    offset = int.from_bytes(half_bytes * slots, "little")
    raw = (prod + offset).to_bytes(slots * nbytes, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
            for i in range(slots)]


def _div1(p, d):
    """Exact univariate division of int lists; None when inexact."""
    while p and not p[-1]:
        p.pop()
    if not p:
        return []
    ld = len(d)
    if len(p) < ld:
        return None
    dlc = d[-1]
    q = [0] * (len(p) - ld + 1)
    while p:
        if len(p) < ld:
            return None
        qc, r = divmod(p[-1], dlc)
        if r:
            return None
        shift = len(p) - ld
        q[shift] = qc
        if qc:
            for i in range(ld - 1):
                if d[i]:
                    p[i + shift] -= qc * d[i]
        p.pop()
        while p and not p[-1]:
            p.pop()
    return q


def _rec_add(a, b, nv):
    if nv == 0:
        return a + b
    if nv == 1:
        return _add1(_as_level(a, 1), _as_level(b, 1))
    a = _as_level(a, nv)
    b = _as_level(b, nv)
    if not a:
        return b
    if not b:
        return a
    la, lb = len(a), len(b)
    out = []
    for i in range(max(la, lb)):
        ca = a[i] if i < la else 0
        cb = b[i] if i < lb else 0
        if _is_zero_rec(ca):
            out.append(cb)
        elif _is_zero_rec(cb):
            out.append(ca)
        else:
            out.append(_rec_add(ca, cb, nv - 1))
    return _trim(out)


def _rec_sub(a, b, nv):
    if nv == 0:
        return a - b
    if nv == 1:
        return _sub1(_as_level(a, 1), _as_level(b, 1))
    a = _as_level(a, nv)
    b = _as_level(b, nv)
    out = list(a) + [0] * (len(b) - len(a))
    for i, cb in enumerate(b):
        if _is_zero_rec(cb):
            continue
        out[i] = _rec_sub(out[i], cb, nv - 1)
    return _trim(out)


def _rec_mul(a, b, nv):
    if nv == 0:
        return a * b
    if nv == 1:
        return _mul1(_as_level(a, 1), _as_level(b, 1))
    a = _as_level(a, nv)
    b = _as_level(b, nv)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if _is_zero_rec(ca):
            continue
        for j, cb in enumerate(b):
            if _is_zero_rec(cb):
                continue
            prod = _rec_mul(ca, cb, nv - 1)
            if _is_zero_rec(out[i + j]):
                out[i + j] = prod
            else:
                out[i + j] = _rec_add(out[i + j], prod, nv - 1)
    return _trim(out)


def _rec_divide(p, d, nv):
    """Exact division in recursive form; None when not exactly divisible.

    The top term of the working remainder cancels by construction after
    each exact leading-coefficient division, so it is popped instead of
    subtracted.
    """
    if nv == 0:
        if not d:
            raise ZeroDivisionError("zero divisor")
        qc, r = divmod(p, d)
        return qc if not r else None
    if nv == 1:
        d1 = _trim(list(_as_level(d, 1)))
        if not d1:
            raise ZeroDivisionError("zero divisor")
        return _div1(list(_as_level(p, 1)), d1)
    p = _trim(list(_as_level(p, nv)))
    d = _trim(list(_as_level(d, nv)))
    if not d:
        raise ZeroDivisionError("zero divisor")
    if p and len(p) < len(d):
        return None
    q = [0] * (len(p) - len(d) + 1) if len(p) >= len(d) else []
    dlead = d[-1]
    while p:
        if len(p) < len(d):
            return None
        qc = _rec_divide(p[-1], dlead, nv - 1)
        if qc is None:
            return None
        shift = len(p) - len(d)
        q[shift] = qc
        if not _is_zero_rec(qc):
            for i in range(len(d) - 1):
                dc = d[i]
                if _is_zero_rec(dc):
                    continue
                prod = _rec_mul(qc, dc, nv - 1)
                p[i + shift] = _rec_sub(p[i + shift], prod, nv - 1)
        p.pop()
        while p and _is_zero_rec(p[-1]):
            p.pop()
    return q


def _rec_collect(r, nv, rev_exps, out):
    """Flatten a recursive representation back into a term dict.

    Exponents are discovered outermost (last variable) first, so the path
    is reversed to recover variable-table order.
    """
    if nv == 0:
        c = _as_level(r, 0)
        if c:
            out[tuple(reversed(rev_exps))] = c
        return
    for e, c in enumerate(_as_level(r, nv)):
        if _is_zero_rec(c):
            continue
        rev_exps.append(e)
        _rec_collect(c, nv - 1, rev_exps, out)
        rev_exps.pop()


# --- packed (Kronecker substitution) multiplication ----------------------


def _packed_mul(a, b):
    """Multiply by packing exponents into one big-integer product.

    Only used when every coefficient is an int; returns None when the
    degree box is too large, so the caller can fall back to dict
    convolution.
    """
    for c in a.terms.values():
        if not isinstance(c, int):
            return None
    for c in b.terms.values():
        if not isinstance(c, int):
            return None
    da = a.max_degrees()
    db = b.max_degrees()
    radices = [x + y + 1 for x, y in zip(da, db)]
    slots = 1
    for r in radices:
        slots *= r
    if slots > _PACK_MAX_SLOTS:
        return None
    nv = len(radices)
    strides = [1] * nv
    for i in range(nv - 2, -1, -1):
        strides[i] = strides[i + 1] * radices[i + 1]
    maxa = max(abs(c) for c in a.terms.values())
    maxb = max(abs(c) for c in b.terms.values())
    bound = min(len(a.terms), len(b.terms)) * maxa * maxb
    bits = ((bound.bit_length() + 2 + 7) // 8) * 8
    nbytes = bits // 8
    half = 1 << (bits - 1)
    half_bytes = half.to_bytes(nbytes, "little")
    offset = int.from_bytes(half_bytes * slots, "little")

    def encode(poly):
        buf = bytearray(half_bytes * slots)
        for exps, c in poly.terms.items():
            idx = 0
            for e, st in zip(exps, strides):
                idx += e * st
            off = idx * nbytes
            buf[off:off + nbytes] = (c + half).to_bytes(nbytes, "little")
        return int.from_bytes(buf, "little") - offset

    na = encode(a)
    nb = encode(b)
    if _mpz is not None:
        prod = int(_mpz(na) * _mpz(nb))
    else:
        prod = na * nb
    raw = (prod + offset).to_bytes(slots * nbytes, "little")
    out = {}
    for idx in range(slots):
        c = int.from_bytes(raw[idx * nbytes:(idx + 1) * nbytes], "little") - half
        if not c:
            continue
        rem = idx
        exps = [0] * nv
        for i in range(nv):
            exps[i], rem = divmod(rem, strides[i])
        out[tuple(exps)] = c
    return Poly._raw(a.vars, out)
