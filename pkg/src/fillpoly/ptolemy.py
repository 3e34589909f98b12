"""Step-by-step solving of the transcribed triangulation equations.

Every equation used here was transcribed once into a data file and is
consumed verbatim: each is a sum of terms, each term a monomial
coefficient in L and M times exactly two gamma factors.  The base solvers
pin down the starting values from the two- or three-equation systems of
each family; chain_solve then walks the step equations in walk order,
binding one new value per step by solving the equation that is linear in
it, and re-checks every equation solved so far after each bind.

The step equations are close to, but not always exactly, the shape
  (new)(dropped) + (carried p)^2 - (carried f)^2 = 0
suggested by the walk labels.  audit_step_roles reports how each
transcribed equation differs from that shape (global sign, exchanged
squares); the solvers never normalize those differences away.
"""

from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .farey import Slope
from .poly import Poly
from .quadext import QuadExt
from .ratfunc import RatFunc, parse_poly, parse_ratfunc

PVARS = ("L", "M")

DEFAULT_ROOT_BRANCH = 1


def gamma_name(slope):
    """The variable name used for the value at a slope."""
    return "g_%s" % slope


class PtolemyEq:
    """One transcribed equation: sum of (coefficient, gamma pair) terms."""

    __slots__ = ("label", "terms")

    def __init__(self, label, terms):
        checked = []
        for coef, gammas in terms:
            if not isinstance(coef, Poly):
                raise TypeError("coefficient must be a Poly")
            gammas = tuple(gammas)
            if len(gammas) != 2:
                raise ValueError("term in %r has gamma degree %d, want exactly 2"
                                 % (label, len(gammas)))
            checked.append((coef, gammas))
        if not checked:
            raise ValueError("equation %r has no terms" % (label,))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "terms", tuple(checked))

    def __setattr__(self, name, value):
        raise AttributeError("PtolemyEq is immutable")

    def gamma_names(self):
        out = set()
        for _, gammas in self.terms:
            out.update(gammas)
        return out

    def __str__(self):
        parts = []
        for coef, gammas in self.terms:
            factors = []
            if coef != Poly.one(coef.vars):
                factors.append("(%s)" % coef)
            factors.extend(gammas)
            parts.append("*".join(factors))
        return "%s: %s = 0" % (self.label, " + ".join(parts))

    __repr__ = __str__


def parse_equations(text):
    """Parse an equation file into an ordered dict label -> PtolemyEq.

    Lines look like  label: term +- term ... = 0  with gamma factors
    written g_<name> (optionally ^2) and monomial coefficients in L, M.
    Binary operators are space-separated; gamma names may contain an
    unspaced minus sign.
    """
    out = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValueError("missing label in %r" % (line,))
        label, rest = line.split(":", 1)
        label = label.strip()
        rest = rest.strip()
        if not rest.endswith("= 0"):
            raise ValueError("equation %r must end with '= 0'" % (label,))
        body = rest[:-3].strip()
        terms = []
        for sign, chunk in _signed_chunks(body):
            coef, gammas = _parse_term(chunk, label)
            terms.append((coef * sign, gammas))
        if label in out:
            raise ValueError("duplicate label %r" % (label,))
        out[label] = PtolemyEq(label, terms)
    return out


def _signed_chunks(body):
    """Split on space-padded +/- only, tracking signs."""
    pieces = body.split(" ")
    sign = 1
    current = []
    first = True
    for piece in pieces:
        if piece == "+" or piece == "-":
            if not current:
                raise ValueError("dangling operator in %r" % (body,))
            yield sign, "".join(current)
            sign = 1 if piece == "+" else -1
            current = []
            continue
        if first and piece.startswith("-"):
            sign = -1
            piece = piece[1:]
        current.append(piece)
        first = False
    if not current:
        raise ValueError("empty term in %r" % (body,))
    yield sign, "".join(current)


def _parse_term(chunk, label):
    coef_factors = []
    gammas = []
    for factor in chunk.split("*"):
        if not factor:
            raise ValueError("empty factor in %r (%s)" % (chunk, label))
        if factor.startswith("g_"):
            if factor.endswith("^2"):
                name = factor[:-2]
                gammas.extend([name, name])
            else:
                gammas.append(factor)
        else:
            coef_factors.append(factor)
    coef = parse_poly("*".join(coef_factors) or "1", PVARS)
    return coef, tuple(gammas)


@lru_cache(maxsize=None)
def load_equations(filename):
    """Equations from the package data directory, parsed once."""
    text = resources.files(__package__).joinpath("data", filename).read_text()
    return parse_equations(text)


@lru_cache(maxsize=None)
def load_values(filename):
    """Reference values from a sectioned data file, parsed into RatFunc."""
    text = resources.files(__package__).joinpath("data", filename).read_text()
    out = {}
    section = None
    chunks = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            if section in chunks:
                raise ValueError("duplicate section %r" % (section,))
            chunks[section] = []
            continue
        if section is None:
            raise ValueError("content before first section: %r" % (line,))
        chunks[section].append(line)
    for name, lines in chunks.items():
        out[name] = parse_ratfunc(" ".join(lines), PVARS)
    return out


class Assignment:
    """Immutable map from gamma names to exact values.

    Values are RatFunc or QuadExt; all QuadExt values in one assignment
    must share a radicand, which the assignment carries once bound.
    """

    __slots__ = ("_vals", "rad")

    def __init__(self, vals=None, rad=None):
        object.__setattr__(self, "_vals", dict(vals or {}))
        object.__setattr__(self, "rad", rad)

    def __setattr__(self, name, value):
        raise AttributeError("Assignment is immutable")

    def bind(self, name, value):
        if name in self._vals:
            raise ValueError("%s is already bound" % (name,))
        if not isinstance(value, (RatFunc, QuadExt)):
            raise TypeError("value for %s must be RatFunc or QuadExt" % (name,))
        rad = self.rad
        if isinstance(value, QuadExt):
            if rad is None:
                rad = value.rad
            elif rad != value.rad:
                raise ValueError("radicand of %s differs from the assignment's"
                                 % (name,))
        vals = dict(self._vals)
        vals[name] = value
        return Assignment(vals, rad)

    def value(self, name):
        try:
            return self._vals[name]
        except KeyError:
            raise KeyError("no value bound for %s" % (name,)) from None

    def __contains__(self, name):
        return name in self._vals

    def names(self):
        return sorted(self._vals)

    def items(self):
        return self._vals.items()

    def __len__(self):
        return len(self._vals)

    def __str__(self):
        return "{%s}" % ", ".join(self.names())


def equation_residual(eq, asg):
    """The exact value of the equation's left side under the assignment."""
    total = None
    for coef, (x, y) in eq.terms:
        term = RatFunc(coef) * asg.value(x) * asg.value(y)
        total = term if total is None else total + term
    return total


def check_equation(eq, asg):
    """Is the equation exactly satisfied?  Unbound names are an error."""
    return equation_residual(eq, asg).is_zero()


def solve_linear_step(eq, asg, unknown):
    """Solve one equation that is linear in the unknown gamma.

    Errors: the unknown appearing squared, the unknown missing entirely,
    or a vanishing linear coefficient.
    """
    lin = None
    const = None
    for coef, (x, y) in eq.terms:
        hits = (x == unknown) + (y == unknown)
        base = RatFunc(coef)
        if hits == 2:
            raise ValueError("%s appears squared in %s" % (unknown, eq.label))
        if hits == 1:
            other = y if x == unknown else x
            term = base * asg.value(other)
            lin = term if lin is None else lin + term
        else:
            term = base * asg.value(x) * asg.value(y)
            const = term if const is None else const + term
    if lin is None:
        raise ValueError("%s does not appear in %s" % (unknown, eq.label))
    if lin.is_zero():
        raise ValueError("linear coefficient of %s vanishes in %s"
                         % (unknown, eq.label))
    if const is None:
        const = RatFunc.zero(PVARS)
    return -(const / lin)


# --- base solvers -------------------------------------------------------------


class _Lin:
    """a*s + b with RatFunc entries; products must stay degree <= 1."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = a
        self.b = b

    @classmethod
    def const(cls, value):
        return cls(RatFunc.zero(PVARS), value)

    @classmethod
    def symbol(cls):
        return cls(RatFunc.one(PVARS), RatFunc.zero(PVARS))

    def __add__(self, other):
        return _Lin(self.a + other.a, self.b + other.b)

    def __mul__(self, other):
        if not self.a.is_zero() and not other.a.is_zero():
            raise ValueError("elimination produced a quadratic; "
                             "the base system is not in the expected shape")
        return _Lin(self.a * other.b + self.b * other.a, self.b * other.b)

    def __neg__(self):
        return _Lin(-self.a, -self.b)

    def at(self, s):
        return self.a * s + self.b


def solve_base_by_elimination(eq_first, eq_second, fixed, solve_for, eliminate):
    """Solve a two-equation base system.

    Both equations must be linear in the eliminated name; the first is
    solved for it (coefficients linear in the remaining unknown), the
    result substituted into the second after clearing its denominator.
    fixed maps already-known gamma names to RatFunc values.
    """
    known = set(fixed) | {solve_for, eliminate}
    for eq in (eq_first, eq_second):
        extra = eq.gamma_names() - known
        if extra:
            raise ValueError("unexpected names %s in %s" % (sorted(extra), eq.label))

    def lin_of(name):
        if name == solve_for:
            return _Lin.symbol()
        return _Lin.const(fixed[name])

    def split(eq):
        """eq == w_part * eliminate + rest, both linear in solve_for."""
        w_part = _Lin.const(RatFunc.zero(PVARS))
        rest = _Lin.const(RatFunc.zero(PVARS))
        for coef, (x, y) in eq.terms:
            hits = (x == eliminate) + (y == eliminate)
            if hits == 2:
                raise ValueError("%s appears squared in %s" % (eliminate, eq.label))
            term = _Lin.const(RatFunc(coef))
            if hits == 1:
                other = y if x == eliminate else x
                w_part = w_part + term * lin_of(other)
            else:
                rest = rest + term * lin_of(x) * lin_of(y)
        return w_part, rest

    w1, r1 = split(eq_first)      # w1 * w + r1 == 0, so w == -r1 / w1
    w2, r2 = split(eq_second)
    # substitute and clear the denominator w1: w-terms pick up -r1,
    # the rest is scaled by w1
    total = w2 * (-r1) + r2 * w1
    if total.a.is_zero():
        raise ValueError("elimination left nothing to solve for %s" % (solve_for,))
    s = -(total.b / total.a)
    w1_at = w1.at(s)
    if w1_at.is_zero():
        raise ValueError("eliminated name %s has vanishing coefficient" % (eliminate,))
    w = -(r1.at(s) / w1_at)
    asg = Assignment()
    for name, value in fixed.items():
        asg = asg.bind(name, value)
    asg = asg.bind(solve_for, s)
    asg = asg.bind(eliminate, w)
    for eq in (eq_first, eq_second):
        if not check_equation(eq, asg):
            raise ArithmeticError("%s does not close after the base solve"
                                  % (eq.label,))
    return asg


def solve_pretzel_base(equations=None):
    """Base values for the pretzel pipeline from its two gluing equations.

    The value at 3/1 is set to 1; the value at 4/1 is eliminated from the
    first equation and the second then determines the value at 1/0.
    """
    eqs = equations or load_equations("pretzel238.eqs")
    return solve_base_by_elimination(
        eqs["tet0"], eqs["tet1"],
        fixed={"g_3/1": RatFunc.one(PVARS)},
        solve_for="g_1/0",
        eliminate="g_4/1")


def solve_whitehead_base(equations=None, branch=DEFAULT_ROOT_BRANCH):
    """Base values for the Whitehead pipeline from its three link equations.

    The value at 1/0 is set to 1.  The first two equations are linear in
    the value at 3/1 and in the product of the two remaining unknowns, so
    a 2x2 solve fixes both; the third equation then gives the square of
    the value named g_0(23), whose root enters as the shared radicand.
    branch picks the sign of that root (+1 or -1).
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    eqs = equations or load_equations("whitehead.eqs")
    one = RatFunc.one(PVARS)
    base_name = "g_1/0"
    single = "g_3/1"
    pair = ("g_0(23)", "g_2/1")
    rows = []
    for label in ("link1", "link2"):
        eq = eqs[label]
        a = b = c = RatFunc.zero(PVARS)
        for coef, (x, y) in eq.terms:
            term = RatFunc(coef)
            names = {x, y}
            if names == set(pair):
                b = b + term
            elif single in names:
                other = y if x == single else x
                if other != base_name:
                    raise ValueError("unexpected partner %s in %s" % (other, label))
                c_val = one  # value at 1/0
                a = a + term * c_val
            elif names == {base_name}:
                c = c + term
            else:
                raise ValueError("unexpected term %s*%s in %s" % (x, y, label))
        rows.append((a, b, c))
    (a1, b1, c1), (a2, b2, c2) = rows
    det = a1 * b2 - a2 * b1
    if det.is_zero():
        raise ValueError("singular base system")
    t = (b1 * c2 - b2 * c1) / det
    z = (a2 * c1 - a1 * c2) / det
    # third equation: collect the coefficient of the squared pair head and
    # evaluate everything else to find the radicand
    eq3 = eqs["link3"]
    head = pair[0]
    partial = (Assignment()
               .bind(base_name, one)
               .bind(single, t))
    sq_coef = None
    rest = RatFunc.zero(PVARS)
    for coef, (x, y) in eq3.terms:
        if x == head and y == head:
            if sq_coef is not None:
                raise ValueError("two squared terms for %s in link3" % (head,))
            sq_coef = RatFunc(coef)
        elif head in (x, y):
            raise ValueError("%s appears unsquared in link3" % (head,))
        else:
            rest = rest + RatFunc(coef) * partial.value(x) * partial.value(y)
    if sq_coef is None or sq_coef.is_zero():
        raise ValueError("link3 does not determine %s" % (head,))
    rad = -(rest / sq_coef)
    if rad.is_zero():
        raise ValueError("radicand vanishes; the root would be rational")
    root = QuadExt.pure_root(RatFunc.const(PVARS, branch), rad)
    second = QuadExt.rational(z, rad) / root
    asg = partial.bind(pair[0], root).bind(pair[1], second)
    for label in ("link1", "link2", "link3"):
        if not check_equation(eqs[label], asg):
            raise ArithmeticError("%s does not close after the base solve"
                                  % (label,))
    return asg


# --- the walk chain ------------------------------------------------------------


def chain_solve(labels, step_eqs, base, upto):
    """Bind the new value of each walk step from its transcribed equation.

    labels come from walk_labels; step_eqs maps step index -> PtolemyEq,
    transcribed verbatim.  Steps 0..upto are solved in order, each binding
    the gamma at that step's new slope, and every equation solved so far
    is re-checked after each bind.  Values must stay pure: entirely
    rational or an exact multiple of the shared root.
    """
    if upto < 0 or upto >= len(labels):
        raise ValueError("upto out of range")
    asg = base
    for k in range(upto + 1):
        if k not in step_eqs:
            raise ValueError("no equation supplied for step %d" % (k,))
        eq = step_eqs[k]
        unknown = gamma_name(labels[k].h)
        if unknown in asg:
            raise ValueError("step %d wants to rebind %s" % (k, unknown))
        value = solve_linear_step(eq, asg, unknown)
        if isinstance(value, QuadExt) and not (value.is_rational()
                                               or value.is_pure_root()):
            raise ArithmeticError("value at step %d mixes rational and root parts"
                                  % (k,))
        asg = asg.bind(unknown, value)
        for j in range(k + 1):
            if not check_equation(step_eqs[j], asg):
                raise ArithmeticError("step %d no longer satisfied after step %d"
                                      % (j, k))
    return asg


def audit_step_roles(eq, step):
    """How far one transcribed step equation is from its labelled shape.

    The labels suggest  (new)(dropped) + p^2 - f^2 = 0.  Returns a list of
    notes, empty when the equation matches exactly; recognized deviations
    are a global sign flip and exchanged p/f squares.  The notes are
    reports, not corrections: solving always uses the equation verbatim.
    """
    expected = {
        _pair_key(gamma_name(step.h), gamma_name(step.o)): 1,
        _pair_key(gamma_name(step.p), gamma_name(step.p)): 1,
        _pair_key(gamma_name(step.f), gamma_name(step.f)): -1,
    }
    actual = {}
    for coef, (x, y) in eq.terms:
        if not coef.is_constant():
            return ["non-constant coefficient on %s*%s" % (x, y)]
        key = _pair_key(x, y)
        actual[key] = actual.get(key, 0) + coef.constant_value()
    if actual == expected:
        return []
    flipped = {k: -v for k, v in expected.items()}
    if actual == flipped:
        return ["global sign flipped"]
    swapped = {
        _pair_key(gamma_name(step.h), gamma_name(step.o)): 1,
        _pair_key(gamma_name(step.f), gamma_name(step.f)): 1,
        _pair_key(gamma_name(step.p), gamma_name(step.p)): -1,
    }
    if actual == swapped:
        return ["p and f squares exchanged"]
    if actual == {k: -v for k, v in swapped.items()}:
        return ["global sign flipped", "p and f squares exchanged"]
    return ["unrecognized shape: %s" % (eq,)]


def _pair_key(x, y):
    return tuple(sorted((x, y)))
