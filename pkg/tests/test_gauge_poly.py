from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nadosc.errors import InvalidInputError
from nadosc.gauge_poly import (
    MAX_DEGREE,
    T,
    X,
    Y,
    Z,
    ZERO,
    PolyFourPotential,
    ScalarPoly,
    covariant_tensor,
    example_potential,
    field_tensor_poly,
    gauge_report,
    gauge_transform,
    grad4,
    to_fraction,
)

R2 = X * X + Y * Y + Z * Z
q = Fraction


def test_grad4_examples():
    assert grad4(T * T) == PolyFourPotential([2 * T, 0, 0, 0])
    assert grad4(X * X) == PolyFourPotential([0, -2 * X, 0, 0])
    lam = example_potential("ex1_gauge_fn", 1)
    assert grad4(lam) == PolyFourPotential([(R2 - T * T) * q(-1, 4), T * X * q(1, 2), T * Y * q(1, 2), T * Z * q(1, 2)])


def test_gauge_transform_example1():
    moved = gauge_transform(example_potential("ex1_raw", 1), example_potential("ex1_gauge_fn", 1))
    assert moved == PolyFourPotential([(R2 + T * T) * q(1, 4), T * X * q(1, 2), T * Y * q(1, 2), T * Z * q(1, 2)])


def test_gauge_transform_example2():
    moved = gauge_transform(example_potential("ex2_raw", 1), example_potential("ex2_gauge_fn", 1))
    expected = PolyFourPotential([(X * X + Y * Y + T * T) * q(-1, 4), Y + T * X * q(1, 2), -X + T * Y * q(1, 2), 0])
    assert moved == expected


def test_gauge_transform_zero_is_identity():
    a = example_potential("ex2_raw", 3)
    assert gauge_transform(a, ZERO) == a


def test_field_tensor_example1():
    moved = gauge_transform(example_potential("ex1_raw", 1), example_potential("ex1_gauge_fn", 1))
    f = field_tensor_poly(moved)
    for k, xk in enumerate((X, Y, Z), start=1):
        assert f[0, k] == xk
    assert all(f[i, k].is_zero() for i in range(1, 4) for k in range(1, 4))
    assert f == covariant_tensor(1)


def test_field_tensor_example2_is_constant_magnetic():
    f = field_tensor_poly(example_potential("ex2_raw", 1))
    assert f[1, 2] == 2 and f[2, 1] == -2
    assert all(f[0, k].is_zero() for k in range(4))


def test_pure_gauge_has_no_field():
    assert field_tensor_poly(grad4(T * X * Y + Z**3 - T * T * X)).is_zero()


def test_example_potentials():
    assert example_potential("ex1_raw", 2) == PolyFourPotential([R2, 0, 0, 0])
    assert example_potential("ex1_covariant", 1) == PolyFourPotential(
        [(T * T + R2) * q(1, 4), T * X * q(1, 2), T * Y * q(1, 2), T * Z * q(1, 2)]
    )
    assert example_potential("ex2_raw", 1) == PolyFourPotential([0, Y, -X, 0])
    with pytest.raises(InvalidInputError):
        example_potential("ex3_raw")


def test_gauge_reports_pass():
    for ex in (1, 2):
        rep = gauge_report(ex)
        assert rep.passed, rep.render()
    rep = gauge_report(1)
    assert rep["F(ex1_raw) == F(ex1_transformed)"].residual == 0.0
    assert rep["F(ex1_transformed) == lambda(u^mu x^nu - u^nu x^mu)"].passed


def test_example2_findings():
    rep = gauge_report(2)
    vals = {r.name: r.residual for r in rep.findings}
    assert vals["F(ex2_raw) - rho(u^mu x^nu - u^nu x^mu) (max |coeff|)"] == 2.0
    assert vals["ex2_covariant - ex2_transformed (max |coeff|)"] > 0


def test_gauge_report_unknown():
    with pytest.raises(InvalidInputError):
        gauge_report(3)


def test_canonical_text():
    p = T * T * q(1, 4) + X * 3 - 2
    assert str(p) == "-2/1 + 3/1*x + 1/4*t^2"
    assert str(ZERO) == "0"
    assert str(ScalarPoly({(0, 0, 0, 0): q(2, 4)})) == "1/2"


def test_degree_cap():
    with pytest.raises(InvalidInputError):
        X ** (MAX_DEGREE + 1)


def test_to_fraction():
    assert to_fraction(0.7) == q(7, 10)
    assert to_fraction("3/8") == q(3, 8)
    with pytest.raises(InvalidInputError):
        to_fraction(1j)


def test_zero_coefficients_not_stored():
    assert (X - X).terms == {}


def test_evaluation():
    assert (X * X * Y + T)(t=1, x=2, y=3) == 13


monomials = st.tuples(*[st.integers(0, 1)] * 4).filter(lambda e: sum(e) <= 3)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.dictionaries(monomials, coeffs, max_size=4).map(ScalarPoly)
potentials = st.lists(polys, min_size=4, max_size=4).map(PolyFourPotential)


@given(potentials, potentials)
def test_field_tensor_linear(a, b):
    assert field_tensor_poly(a + b) == field_tensor_poly(a) + field_tensor_poly(b)


@given(potentials)
def test_field_tensor_antisymmetric(a):
    assert field_tensor_poly(a).is_antisymmetric()


@given(potentials, polys)
def test_gauge_invariance_property(a, lam):
    assert field_tensor_poly(gauge_transform(a, lam)) == field_tensor_poly(a)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b).diff("x") == a.diff("x") * b + a * b.diff("x")
