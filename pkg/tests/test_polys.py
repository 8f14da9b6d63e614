"""Dense/sparse polynomial arithmetic and canonical-form helpers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sparsemult.polys import (
    QQ,
    DensePoly,
    PolynomialError,
    PowerConstant,
    SparsePoly,
    divides,
    height,
    primitive_positive,
    sparse_height,
    sparse_primitive_positive,
)

small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=8).map(
    lambda cs: DensePoly.from_ints(QQ, cs)
)


def test_basic_arithmetic():
    f = DensePoly.from_ints(QQ, [1, 2, 1])  # (x+1)^2
    g = DensePoly.from_ints(QQ, [1, 1])
    assert f == g * g
    assert (f - f).is_zero
    assert f.degree == 2
    assert DensePoly.zero(QQ).degree == -1
    assert f.coeff(5) == 0


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_divmod_roundtrip(f, g):
    if g.is_zero:
        with pytest.raises(PolynomialError):
            f.divmod(g)
        return
    q, r = f.divmod(g)
    assert f == q * g + r
    assert r.is_zero or r.degree < g.degree


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_gcd_divides_both(f, g):
    d = f.gcd(g)
    if d.is_zero:
        assert f.is_zero and g.is_zero
        return
    assert f.rem(d).is_zero
    assert g.rem(d).is_zero


def test_squarefree_part_q():
    u = DensePoly.from_ints(QQ, [1, 1])
    f = u * u * u * DensePoly.from_ints(QQ, [-2, 1])
    sf = f.squarefree_part()
    assert sf == (DensePoly.from_ints(QQ, [1, 1]) * DensePoly.from_ints(QQ, [-2, 1])).monic()


def test_pow_mod():
    f = DensePoly.from_ints(QQ, [1, 1, 1])
    x = DensePoly.x(QQ)
    assert x.pow_mod(3, f) == DensePoly.one(QQ)  # x^3 = 1 mod x^2+x+1


def test_sparse_dense_mul_agree():
    a = SparsePoly.make(QQ, [(Fraction(2), 0), (Fraction(-1), 5)])
    b = SparsePoly.make(QQ, [(Fraction(1), 1), (Fraction(3), 4)])
    assert (a * b).to_dense() == a.to_dense() * b.to_dense()


def test_sparse_collision_cancels():
    a = SparsePoly.make(QQ, [(Fraction(1), 0), (Fraction(1), 2)])
    b = SparsePoly.make(QQ, [(Fraction(-1), 0), (Fraction(1), 2)])
    assert (a * b).sparsity == 2  # x^4 - 1


def test_primitive_positive_and_height():
    f = DensePoly(QQ, [Fraction(-3, 2), Fraction(0), Fraction(9, 4)])
    g = primitive_positive(f)
    assert [c for c in g.coeffs] == [-2, 0, 3]
    assert height(g) == 3
    h = sparse_primitive_positive(
        SparsePoly.make(QQ, [(Fraction(4), 0), (Fraction(-6), 7)])
    )
    assert [(c, e) for c, e in h.terms] == [(-2, 0), (3, 7)]
    assert sparse_height(h) == 3


def test_divides_sparse():
    f = DensePoly.from_ints(QQ, [1, 1, 1])
    h = SparsePoly.make(QQ, [(Fraction(-1), 0), (Fraction(1), 3)])
    assert divides(f, h)
    h2 = SparsePoly.make(QQ, [(Fraction(1), 0), (Fraction(1), 3)])
    assert not divides(f, h2)


def test_power_constant():
    pc = PowerConstant(Fraction(-1, 2), 30)
    assert pc.evaluate() == Fraction(1, 2**30)
    with pytest.raises(PolynomialError):
        PowerConstant(Fraction(10), 10**9).evaluate(digit_cap=5)


def test_strip_x():
    f = DensePoly.from_ints(QQ, [0, 0, 3, 1])
    b, g = f.strip_x()
    assert b == 2
    assert [c for c in g.coeffs] == [3, 1]
