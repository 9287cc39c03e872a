from fractions import Fraction as PyFraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locus import GF, QQ
from locus.coeff import FieldMismatchError

F = GF(32003)
F7 = GF(7)

gf_elems = st.integers(min_value=0, max_value=32002).map(F)
nonzero_gf = st.integers(min_value=1, max_value=32002).map(F)
qq_elems = st.fractions(max_denominator=10 ** 6).map(QQ)
nonzero_qq = st.fractions(max_denominator=10 ** 6).filter(lambda q: q != 0).map(QQ)


def test_characteristic_wraps():
    assert F(32002) + F(1) == F(0)


def test_rational_sum():
    assert QQ(PyFraction(1, 2)) + QQ(PyFraction(1, 3)) == QQ(PyFraction(5, 6))


def test_half_mod_p():
    # extended Euclid: 2 * 16002 = 32004 = 1 + 32003
    assert F(2) * F(16002) == F(1)
    assert F(2).inv() == F(16002)


def test_small_field_inverse():
    assert F7(3).inv() == F7(5)


def test_rational_inverse():
    assert QQ(PyFraction(2, 3)).inv() == QQ(PyFraction(3, 2))


def test_inverse_of_one():
    assert F(1).inv() == F(1)
    assert QQ(1).inv() == QQ(1)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F(0).inv()
    with pytest.raises(ZeroDivisionError):
        QQ(0).inv()


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        F(1) + F7(1)
    with pytest.raises(FieldMismatchError):
        F(1) + QQ(1)


def test_representatives_are_canonical():
    assert F(-1).value == 32002
    assert F(32003 * 5 + 4).value == 4


def test_rationals_normalized():
    q = QQ(PyFraction(6, -4))
    assert q.value.numerator == -3 and q.value.denominator == 2


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        GF(32004)


@settings(max_examples=1000, deadline=None)
@given(gf_elems, gf_elems, gf_elems)
def test_gf_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=1000, deadline=None)
@given(nonzero_gf)
def test_gf_inverse(a):
    assert a * a.inv() == F(1)


@settings(max_examples=1000, deadline=None)
@given(st.integers(), st.integers())
def test_gf_matches_big_integers(x, y):
    assert (F(x) * F(y)).value == (x * y) % 32003
    assert (F(x) + F(y)).value == (x + y) % 32003
    assert (F(x) - F(y)).value == (x - y) % 32003


@settings(max_examples=1000, deadline=None)
@given(qq_elems, qq_elems, qq_elems)
def test_qq_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=1000, deadline=None)
@given(nonzero_qq)
def test_qq_inverse(a):
    assert a * a.inv() == QQ(1)
