import pytest
from hypothesis import given

from heckekoszul.laurent import ONE, V, V_INV, ZERO, LaurentPoly, add, mul, substitute_neg_v

from strategies import laurents


def test_add_examples():
    assert (V + 1) + (-1) == V
    assert ZERO + ZERO == ZERO
    assert (V - V_INV) + V_INV == V


def test_mul_examples():
    assert (V + V_INV) * (V - V_INV) == LaurentPoly({2: 1, -2: -1})
    assert V * V_INV == ONE
    assert (V - V_INV) ** 2 == LaurentPoly({2: 1, 0: -2, -2: 1})


def test_substitute_examples():
    assert substitute_neg_v(V) == -V
    assert (V**2 - 1).substitute_neg_v() == V**2 - 1
    assert (V - V_INV).substitute_neg_v() == -V + V_INV


def test_str():
    assert str((V - V_INV) ** 2) == "v^2 - 2 + v^-2"
    assert str(LaurentPoly.monomial(2, 3)) == "3*v^2"
    assert str(ZERO) == "0"


def test_zero_coefficients_dropped():
    assert LaurentPoly({3: 0, 1: 2}).terms == {1: 2}
    assert (V - V).is_zero()


def test_units():
    assert LaurentPoly.monomial(-3, -1).is_unit()
    assert LaurentPoly.monomial(-3, -1).inverse() == LaurentPoly.monomial(3, -1)
    assert not (V + 1).is_unit()
    with pytest.raises(ZeroDivisionError):
        (V + 1).inverse()


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert add(a, b) == b + a
    assert (a + b) + c == a + (b + c)
    assert mul(a, b) == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(laurents, laurents)
def test_neg_v_is_ring_involution(a, b):
    assert substitute_neg_v(substitute_neg_v(a)) == a
    assert substitute_neg_v(a * b) == substitute_neg_v(a) * substitute_neg_v(b)
    assert substitute_neg_v(a + b) == substitute_neg_v(a) + substitute_neg_v(b)


@given(laurents)
def test_hash_consistent(a):
    b = LaurentPoly(dict(a.terms))
    assert a == b and hash(a) == hash(b)
