"""End-to-end acceptance checks, one test per numbered criterion.

Every check is exact (term-map equality on polynomials, cross-multiplied
equality on rational functions); there are no tolerances anywhere.  Each
test prints a one-line CRITERION verdict that survives pytest's capture,
then asserts, so a red line always names the subchecks that broke.
"""

from fillpoly.families import (_unit_normal, divides_conjugate, get_family,
                               numeric_agreement, twist_A,
                               twist_base_identity_check, twist_gap,
                               twist_recurrence_check)
from fillpoly.farey import (Slope, Walk, crossing_count,
                            crossing_count_oracle, walk_labels)
from fillpoly.hn import (h_recurrence_check, iterate_exchange,
                         symbolic_tail_values, tail_poly)
from fillpoly.matchings import (TAIL_VARS, count_subsets, enumerate_matchings,
                                matching_sum)
from fillpoly.poly import Poly, poly_divides
from fillpoly.ptolemy import chain_solve, check_equation, load_values
from fillpoly.quadext import QuadExt
from fillpoly.ratfunc import RatFunc, parse_poly


def _report(capsys, num, title, failures):
    verdict = "PASS" if not failures else "FAIL"
    detail = "" if not failures else ": " + "; ".join(failures)
    with capsys.disabled():
        print("CRITERION %d: %s (%s)%s" % (num, verdict, title, detail))


def pp(text):
    return parse_poly(text, TAIL_VARS)


def fib(n):
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def test_criterion_1(capsys):
    failures = []
    for n in range(1, 9):
        if tail_poly(n) != matching_sum(2 * n):
            failures.append("closed form != matching sum at n=%d" % n)
    for n in range(1, 13):
        if len(enumerate_matchings(n)) != fib(n + 1):
            failures.append("count at %d rungs is not Fibonacci" % n)
    for N in range(1, 9):
        got = {}
        for exps, coef in matching_sum(2 * N).terms.items():
            ef, eo, ep = exps
            if ef % 2 or eo % 2 or ep % 2:
                failures.append("odd exponent in P(%d)" % (2 * N))
            got[(ef // 2, eo // 2)] = coef
        for a in range(N + 1):
            for b in range(N + 1 - a):
                want = count_subsets(N, a, b)
                if (N - a - b) % 2:
                    want = -want
                if got.pop((a, b), 0) != want:
                    failures.append("coefficient (a=%d,b=%d) of P(%d)"
                                    % (a, b, 2 * N))
        if got:
            failures.append("P(%d) has unexpected terms %s" % (2 * N, sorted(got)))
    _report(capsys, 1, "closed form vs matching enumeration", failures)
    assert not failures, "; ".join(failures)


def test_criterion_2(capsys):
    failures = []
    mix = pp("g_f^2 + g_o^2 - g_p^2")
    prod = pp("g_f^2 * g_o^2")
    for n in range(3, 9):
        lhs = matching_sum(2 * n)
        rhs = matching_sum(2 * n - 2) * mix - prod * matching_sum(2 * n - 4)
        if lhs != rhs:
            failures.append("two-step recurrence at n=%d" % n)
    for n in range(4, 9):
        gap = pp("g_f^%d * g_o^%d * g_p" % (n - 3, n - 2)) ** 2
        lhs = matching_sum(2 * n - 2) * matching_sum(2 * n - 6)
        rhs = matching_sum(2 * n - 4) ** 2 - gap
        if lhs != rhs:
            failures.append("product recurrence at n=%d" % n)
    for n in range(4, 11):
        if not h_recurrence_check(n):
            failures.append("collapsed-tail product recurrence at n=%d" % n)
    _report(capsys, 2, "recurrences", failures)
    assert not failures, "; ".join(failures)


def test_criterion_3(capsys):
    failures = []
    f, o, p = symbolic_tail_values()
    # the slopes carrying the f, o, p roles at the first tail step, and the
    # sequence of slopes the exchanges produce
    sf, so, sp = Slope(1, 0), Slope(-1, 1), Slope(0, 1)
    for n in range(1, 9):
        got = iterate_exchange(f, o, p, n)
        den = (Poly.variable(TAIL_VARS, "g_f") ** (n - 1)
               * Poly.variable(TAIL_VARS, "g_o") ** n)
        if got != RatFunc(tail_poly(n)) / RatFunc(den):
            failures.append("Laurent value at n=%d" % n)
        if not all(isinstance(c, int) for c in got.num.terms.values()):
            failures.append("non-integer numerator at n=%d" % n)
        if got.den != den:
            failures.append("denominator is not the expected monomial at n=%d" % n)
        sh = Slope(1, n)
        want_exps = (crossing_count(sf, sh), crossing_count(so, sh),
                     0 if sp == sh else crossing_count(sp, sh))
        if want_exps != (n - 1, n, 0):
            failures.append("crossing counts at n=%d are not (%d,%d,0)"
                            % (n, n - 1, n))
        (den_exps,) = [e for e in got.den.terms]
        if den_exps != want_exps:
            failures.append("denominator exponents != crossing counts at n=%d" % n)
    pool = []
    for q in range(0, 9):
        for pnum in range(-8, 9):
            if pnum == 0 and q == 0:
                continue
            s = Slope(pnum, q)
            if abs(s.p) <= 8 and s.q <= 8 and s not in pool:
                pool.append(s)
    mismatches = 0
    for i, a in enumerate(pool):
        for b in pool[i + 1:]:
            want = crossing_count(a, b)
            if want != crossing_count_oracle(a, b, 33):
                mismatches += 1
            if want != crossing_count_oracle(a, b, 34):
                mismatches += 1
    if mismatches:
        failures.append("%d oracle disagreements over %d slope pairs"
                        % (mismatches, len(pool) * (len(pool) - 1) // 2))
    _report(capsys, 3, "Laurent property and crossing counts", failures)
    assert not failures, "; ".join(failures)


def test_criterion_4(capsys):
    failures = []
    fixtures = {
        2: "g_f^2 - g_p^2",
        4: "g_f^4 + g_p^4 - 2*g_f^2*g_p^2 - g_o^2*g_p^2",
        6: ("g_f^6 - g_o^4*g_p^2 - 2*g_f^2*g_o^2*g_p^2 - 3*g_f^4*g_p^2"
            " + 2*g_o^2*g_p^4 + 3*g_f^2*g_p^4 - g_p^6"),
    }
    for k, text in fixtures.items():
        if matching_sum(k) != pp(text):
            failures.append("matching sum fixture at %d rungs" % k)
    tail_fixtures = {
        1: "g_f^2 - g_p^2",
        2: "g_f^4 + g_p^4 - 2*g_f^2*g_p^2 - g_o^2*g_p^2",
    }
    for n, text in tail_fixtures.items():
        if tail_poly(n) != pp(text):
            failures.append("closed-form fixture at n=%d" % n)

    pspec = get_family("pretzel238", "pos")
    pvals = load_values("pretzel238_values.txt")
    if pspec.base_assignment().value("g_1/0") != pvals["g_1/0"]:
        failures.append("derived pretzel g_1/0 != stored short form")

    wvals = load_values("whitehead_values.txt")
    for sign, gname in (("pos", "g_1/1"), ("neg", "g_-1/1")):
        spec = get_family("whitehead", sign)
        labels = walk_labels(Walk(spec.triangle0, spec.triangle1, spec.word(1)))
        eqs = spec.equations()
        step_eqs = {k: eqs[lab] for k, lab in enumerate(spec.step_labels)}
        chain = chain_solve(labels, step_eqs, spec.base_assignment(),
                            len(spec.step_labels) - 1)
        got = chain.value(gname)
        if isinstance(got, QuadExt):
            if not got.is_rational():
                failures.append("whitehead %s value is not rational" % gname)
                continue
            got = got.a
        if got != wvals[gname]:
            failures.append("derived whitehead %s != stored display" % gname)
    _report(capsys, 4, "stored reference values reproduced", failures)
    assert not failures, "; ".join(failures)


def test_criterion_5(capsys):
    failures = []
    fixtures = load_values("pretzel238_values.txt")
    for sign in ("pos", "neg"):
        spec = get_family("pretzel238", sign)
        eqs = spec.equations()
        labels = walk_labels(Walk(spec.triangle0, spec.triangle1, spec.word(1)))
        step_eqs = {k: eqs[lab] for k, lab in enumerate(spec.step_labels)}
        chain = chain_solve(labels, step_eqs, spec.base_assignment(),
                            len(spec.step_labels) - 1)
        asg = spec.base_assignment().bind("g_2/1", chain.value("g_2/1"))
        bound = ("g_1/1", "g_0/1", "g_1/2" if sign == "pos" else "g_-1/1")
        for gname in bound:
            asg = asg.bind(gname, fixtures[gname])
        for label in ("tet0", "tet1") + spec.step_labels:
            if not check_equation(eqs[label], asg):
                failures.append("%s: %s residual nonzero" % (sign, label))
    _report(capsys, 5, "stored long forms satisfy their equations", failures)
    assert not failures, "; ".join(failures)


def test_criterion_6(capsys):
    failures = []
    for sign in ("pos", "neg"):
        if not twist_base_identity_check(sign):
            failures.append("base identity %s" % sign)
    for n in range(2, 9):
        if not twist_recurrence_check(n, "pos"):
            failures.append("pos recurrence at n=%d" % n)
    for n in range(1, 9):
        if not twist_recurrence_check(n, "neg"):
            failures.append("neg recurrence at n=%d" % n)
    _report(capsys, 6, "twist-knot recurrences", failures)
    assert not failures, "; ".join(failures)


def test_criterion_7(capsys, family_runs):
    failures = []
    for sign in ("pos", "neg"):
        spec = get_family("whitehead", sign)
        for m in range(1, 5):
            res = family_runs("whitehead", sign, m)
            if not divides_conjugate(spec, m, result=res):
                failures.append("whitehead %s m=%d divisibility" % (sign, m))
    for sign in ("pos", "neg"):
        spec = get_family("pretzel238", sign)
        for m in range(1, 5):
            res = family_runs("pretzel238", sign, m)
            if not numeric_agreement(spec, m, 20, seed=100 * m, result=res):
                failures.append("pretzel %s m=%d numeric agreement" % (sign, m))
    _report(capsys, 7, "divisibility and dual-pipeline agreement", failures)
    assert not failures, "; ".join(failures)


def test_criterion_8(capsys, family_runs):
    failures = []
    mix = pp("g_f^2 + g_o^2 - g_p^2")
    prod = pp("g_f^2 * g_o^2")
    # two-step recurrence with the product term added instead of subtracted
    if matching_sum(10) == matching_sum(8) * mix + prod * matching_sum(6):
        failures.append("flipped two-step recurrence still passes")
    # product recurrences with the gap added instead of subtracted
    gap = pp("g_f^2 * g_o^3 * g_p") ** 2
    if matching_sum(8) * matching_sum(4) == matching_sum(6) ** 2 + gap:
        failures.append("flipped product recurrence still passes")
    f, o, p = symbolic_tail_values()
    n = 4
    gfpo = RatFunc(Poly.variable(TAIL_VARS, "g_f") ** (n - 1)
                   * Poly.variable(TAIL_VARS, "g_o") ** n)
    if iterate_exchange(f, o, p, n) == -RatFunc(tail_poly(n)) / gfpo:
        failures.append("sign-flipped Laurent value still passes")
    swapped = RatFunc(Poly.variable(TAIL_VARS, "g_f") ** n
                      * Poly.variable(TAIL_VARS, "g_o") ** (n - 1))
    if iterate_exchange(f, o, p, n) == RatFunc(tail_poly(n)) / swapped:
        failures.append("exponent-swapped Laurent value still passes")
    # twist recurrence with the gap subtracted instead of added
    if twist_A(2, "pos") * twist_A(4, "pos") \
            == twist_A(3, "pos") ** 2 - twist_gap("pos", 3):
        failures.append("flipped twist recurrence still passes")
    # wrong-index twist divisor must not divide
    spec = get_family("whitehead", "pos")
    res = family_runs("whitehead", "pos", 1)
    offset, tsign = spec.twist_link
    wrong = _unit_normal(twist_A(1 + offset + 1, tsign))
    if poly_divides(wrong, _unit_normal(res.basis_changed.num))[0]:
        failures.append("shifted twist divisor still divides")
    # a sign-flipped stored value must violate its defining equation
    pspec = get_family("pretzel238", "pos")
    eqs = pspec.equations()
    fixtures = load_values("pretzel238_values.txt")
    labels = walk_labels(Walk(pspec.triangle0, pspec.triangle1, pspec.word(1)))
    step_eqs = {k: eqs[lab] for k, lab in enumerate(pspec.step_labels)}
    chain = chain_solve(labels, step_eqs, pspec.base_assignment(),
                        len(pspec.step_labels) - 1)
    asg = pspec.base_assignment().bind("g_2/1", chain.value("g_2/1"))
    asg = asg.bind("g_1/1", -fixtures["g_1/1"])
    if check_equation(eqs["step1"], asg):
        failures.append("sign-flipped stored value still satisfies step1")
    _report(capsys, 8, "negative controls", failures)
    assert not failures, "; ".join(failures)
