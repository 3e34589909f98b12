from fractions import Fraction

import pytest

from fillpoly.quadext import QuadExt
from fillpoly.ratfunc import RatFunc, parse_ratfunc

LM = ("L", "M")


def rf(text):
    return parse_ratfunc(text, LM)


RAD = rf("1 - L")


def qe(a, b, rad=RAD):
    return QuadExt(rf(a) if isinstance(a, str) else a,
                   rf(b) if isinstance(b, str) else b, rad)


def test_constructor_and_predicates():
    v = qe("L", "M")
    assert v.a == rf("L") and v.b == rf("M") and v.rad == RAD
    assert not v.is_rational() and not v.is_pure_root() and not v.is_zero()
    assert QuadExt.rational(rf("L"), RAD).is_rational()
    assert QuadExt.pure_root(rf("M"), RAD).is_pure_root()
    assert qe(0, 0).is_zero()
    with pytest.raises(ValueError):
        QuadExt(rf("L"), rf("M"), RatFunc.zero(LM))
    with pytest.raises(TypeError):
        QuadExt(rf("L"), rf("M"), "1 - L")


def test_promotion_of_plain_values():
    v = qe("L", "0")
    assert v == rf("L")
    assert v + 1 == qe("L + 1", "0")
    assert Fraction(1, 2) * qe("0", "2") == qe("0", "1")


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        qe("L", "1") + qe("L", "1", rad=rf("M"))
    with pytest.raises(ValueError):
        qe("L", "1") == qe("L", "1", rad=rf("M"))


def test_arithmetic():
    u = qe("1", "1")
    v = qe("1", "-1")
    # (1 + r)(1 - r) = 1 - rad
    assert u * v == qe("L", "0")
    assert u + v == qe("2", "0")
    assert u - u == qe("0", "0")
    assert -u == qe("-1", "-1")
    # squaring brings the radicand down to the rational part
    w = qe("M", "L")
    assert w * w == qe("M^2 + L^2*(1 - L)", "2*L*M")


def test_conjugate_and_conj_product():
    v = qe("M", "L + 1")
    assert v.conjugate() == qe("M", "-L - 1")
    cp = v.conj_product()
    assert isinstance(cp, RatFunc)
    assert cp == rf("M^2 - (L + 1)^2 * (1 - L)")


def test_conj_product_is_multiplicative():
    u = qe("L", "M - 1")
    v = qe("M + 2", "L^2")
    assert (u * v).conj_product() == u.conj_product() * v.conj_product()


def test_reciprocal_and_division():
    v = qe("1", "1")
    r = v.reciprocal()
    assert v * r == qe("1", "0")
    assert (qe("L", "M") / v) * v == qe("L", "M")
    with pytest.raises(ZeroDivisionError):
        qe("0", "0").reciprocal()


def test_pow():
    v = qe("1", "2")
    assert v ** 0 == qe("1", "0")
    assert v ** 3 == v * v * v
    assert v ** -2 == (v * v).reciprocal()
    with pytest.raises(TypeError):
        v ** Fraction(1, 2)


def test_str_and_json():
    v = qe("L", "M")
    assert str(v) == "(L)/(1) + (M)/(1)*sqrt((-L + 1)/(1))"
    data = v.to_json()
    assert set(data) == {"a", "b", "rad"}


def test_immutability():
    v = qe("L", "M")
    with pytest.raises(AttributeError):
        v.a = rf("1")
