from fractions import Fraction

import pytest

from fillpoly.farey import FareyTriangle, Slope, Walk, walk_labels
from fillpoly.ptolemy import (PVARS, audit_step_roles, chain_solve,
                              check_equation, gamma_name, load_equations,
                              load_values, solve_pretzel_base,
                              solve_whitehead_base)
from fillpoly.quadext import QuadExt
from fillpoly.ratfunc import RatFunc, parse_ratfunc


def rf(text):
    return parse_ratfunc(text, PVARS)


def as_rf(v):
    """Unwrap a QuadExt that happens to be rational."""
    if isinstance(v, QuadExt):
        assert v.is_rational()
        return v.a
    return v


def tri(a, b, c):
    return FareyTriangle(Slope.parse(a), Slope.parse(b), Slope.parse(c))


@pytest.fixture(scope="module")
def pretzel():
    base = solve_pretzel_base()
    eqs = load_equations("pretzel238.eqs")
    vals = load_values("pretzel238_values.txt")
    t0 = tri("3/1", "4/1", "1/0")
    t1 = tri("3/1", "1/0", "2/1")
    labels_pos = walk_labels(Walk(t0, t1, "LLRLL"))
    labels_neg = walk_labels(Walk(t0, t1, "LLLRR"))
    step_pos = {0: eqs["step0"], 1: eqs["step1"], 2: eqs["step2"],
                3: eqs["step3pos"]}
    step_neg = {0: eqs["step0"], 1: eqs["step1"], 2: eqs["step2"],
                3: eqs["step3neg"]}
    return {
        "base": base, "eqs": eqs, "vals": vals,
        "labels_pos": labels_pos, "labels_neg": labels_neg,
        "step_pos": step_pos, "step_neg": step_neg,
        "pos": chain_solve(labels_pos, step_pos, base, 3),
        "neg": chain_solve(labels_neg, step_neg, base, 3),
    }


@pytest.fixture(scope="module")
def whitehead():
    base = solve_whitehead_base()
    eqs = load_equations("whitehead.eqs")
    vals = load_values("whitehead_values.txt")
    t0 = tri("3/1", "2/1", "1/0")
    t1 = tri("2/1", "1/0", "1/1")
    labels_pos = walk_labels(Walk(t0, t1, "LRLL"))
    labels_neg = walk_labels(Walk(t0, t1, "LLRR"))
    step_pos = {0: eqs["step0"], 1: eqs["step1"], 2: eqs["step2pos"]}
    step_neg = {0: eqs["step0"], 1: eqs["step1"], 2: eqs["step2neg"]}
    return {
        "base": base, "eqs": eqs, "vals": vals,
        "labels_pos": labels_pos, "labels_neg": labels_neg,
        "step_pos": step_pos, "step_neg": step_neg,
        "pos": chain_solve(labels_pos, step_pos, base, 2),
        "neg": chain_solve(labels_neg, step_neg, base, 2),
    }


def test_gamma_name():
    assert gamma_name(Slope.parse("3/1")) == "g_3/1"
    assert gamma_name(Slope.parse("-1/1")) == "g_-1/1"


def test_pretzel_base_values(pretzel):
    base = pretzel["base"]
    assert base.value("g_3/1") == RatFunc.one(PVARS)
    assert base.value("g_1/0") == rf("(L^2 - M^4) / (M * (L^2 - M^2))")
    assert base.value("g_4/1") == rf("(L^2 - M^2) / (L * (1 - M^2))")
    assert base.value("g_1/0") == pretzel["vals"]["g_1/0"]


def test_pretzel_base_satisfies_its_equations(pretzel):
    base, eqs = pretzel["base"], pretzel["eqs"]
    for label in ("tet0", "tet1"):
        assert check_equation(eqs[label], base)


def test_pretzel_pos_chain_matches_stored_values(pretzel):
    for name in ("g_1/1", "g_0/1", "g_1/2"):
        assert as_rf(pretzel["pos"].value(name)) == pretzel["vals"][name]


def test_pretzel_neg_chain_vs_stored_value(pretzel):
    # the stored table's g_-1/1 entry is -1 times the value forced by its
    # own defining equation; the solver output is the equation-forced one
    got = as_rf(pretzel["neg"].value("g_-1/1"))
    assert got == -pretzel["vals"]["g_-1/1"]
    assert got != pretzel["vals"]["g_-1/1"]


def test_pretzel_numeric_spot_values(pretzel):
    pt = {"L": Fraction(2), "M": Fraction(3)}
    base, pos = pretzel["base"], pretzel["pos"]
    assert base.value("g_1/0").evaluate(pt) == Fraction(77, 15)
    assert base.value("g_4/1").evaluate(pt) == Fraction(5, 16)
    assert as_rf(pos.value("g_2/1")).evaluate(pt) == Fraction(91264, 1125)
    assert as_rf(pos.value("g_1/1")).evaluate(pt) == Fraction(8295767071, 1265625)


def test_pretzel_step_equations_match_walk_roles(pretzel):
    for k, eq in pretzel["step_pos"].items():
        assert audit_step_roles(eq, pretzel["labels_pos"][k]) == []
    for k, eq in pretzel["step_neg"].items():
        assert audit_step_roles(eq, pretzel["labels_neg"][k]) == []


def test_whitehead_base_values(whitehead):
    base, vals = whitehead["base"], whitehead["vals"]
    assert base.value("g_3/1") == rf("(L^2 - M^2) / (L * (1 - M^2))")
    assert base.rad == vals["radicand"]
    g023 = base.value("g_0(23)")
    assert isinstance(g023, QuadExt) and g023.is_pure_root()
    assert g023.b == RatFunc.one(PVARS)
    g21 = base.value("g_2/1")
    assert isinstance(g21, QuadExt) and g21.is_pure_root()
    assert g21.b == rf("(L - M^2) / (M * (L - 1))")


def test_whitehead_pos_chain_matches_stored_values(whitehead):
    pos, vals = whitehead["pos"], whitehead["vals"]
    assert as_rf(pos.value("g_1/1")) == vals["g_1/1"]
    g01 = pos.value("g_0/1")
    assert isinstance(g01, QuadExt) and g01.is_pure_root()
    assert g01.b == vals["g_0/1_root"]
    assert as_rf(pos.value("g_1/2")) == vals["g_1/2"]


def test_whitehead_neg_chain_matches_stored_value(whitehead):
    assert as_rf(whitehead["neg"].value("g_-1/1")) == whitehead["vals"]["g_-1/1"]


def test_whitehead_numeric_spot_values(whitehead):
    pt = {"L": Fraction(3), "M": Fraction(2)}
    assert as_rf(whitehead["pos"].value("g_1/2")).evaluate(pt) \
        == Fraction(-12823, 512)
    assert as_rf(whitehead["neg"].value("g_-1/1")).evaluate(pt) \
        == Fraction(1051, 64)


def test_whitehead_step_audits(whitehead):
    eqs = whitehead["eqs"]
    lp, ln = whitehead["labels_pos"], whitehead["labels_neg"]
    assert audit_step_roles(eqs["step0"], lp[0]) == []
    assert audit_step_roles(eqs["step1"], lp[1]) == ["global sign flipped"]
    assert audit_step_roles(eqs["step2pos"], lp[2]) \
        == ["p and f squares exchanged"]
    assert audit_step_roles(eqs["step2neg"], ln[2]) \
        == ["p and f squares exchanged"]


def test_chain_solve_refuses_to_rebind(pretzel):
    with pytest.raises(ValueError):
        chain_solve(pretzel["labels_pos"], pretzel["step_pos"],
                    pretzel["pos"], 3)


def test_whitehead_branch_argument():
    with pytest.raises(ValueError):
        solve_whitehead_base(branch=2)
    neg = solve_whitehead_base(branch=-1)
    assert neg.value("g_0(23)").b == -RatFunc.one(PVARS)
