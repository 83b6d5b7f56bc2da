from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from okbody.polynomials import (HomogPoly, graded_monomials,
                                has_projective_common_zero, normal_form,
                                poly_divmod)

x0, x1, x2 = (HomogPoly.variable(3, i) for i in range(3))
X, Y, Z, W = (HomogPoly.variable(4, i) for i in range(4))
FERMAT = X ** 3 + Y ** 3 + Z ** 3 + W ** 3

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=8)
nonzero_rationals = rationals.filter(bool)


def random_poly(draw, num_vars=4, degree=3, max_terms=4):
    monos = graded_monomials(num_vars, degree)
    chosen = draw(st.lists(st.sampled_from(monos), min_size=0,
                           max_size=max_terms))
    coeffs = draw(st.lists(rationals, min_size=len(chosen),
                           max_size=len(chosen)))
    terms = {}
    for m, c in zip(chosen, coeffs):
        terms[m] = terms.get(m, Fraction(0)) + c
    return HomogPoly(num_vars, degree, terms)


@st.composite
def homog_cubics(draw):
    return random_poly(draw, num_vars=4, degree=3)


def test_graded_monomials_two_vars_degree_one():
    assert graded_monomials(2, 1) == ((1, 0), (0, 1))


def test_graded_monomials_counts():
    assert len(graded_monomials(3, 2)) == 6
    assert len(graded_monomials(4, 3)) == 20


def test_graded_monomials_against_direct_enumeration():
    expected = sorted((e for e in product(range(4), repeat=4) if sum(e) == 3),
                      reverse=True)
    assert list(graded_monomials(4, 3)) == expected


def test_product_of_variables():
    assert x0 * x1 == HomogPoly.monomial((1, 1, 0))


def test_square_of_sum():
    assert (x0 + x1) ** 2 == HomogPoly(3, 2, {(2, 0, 0): 1, (1, 1, 0): 2,
                                              (0, 2, 0): 1})


def test_difference_of_squares():
    assert (x0 + x1) * (x0 - x1) == x0 ** 2 - x1 ** 2


def test_mixed_degree_sum_rejected():
    with pytest.raises(ValueError):
        x0 + x1 * x2


def test_evaluate():
    p = X * W - Y * Z
    assert p.evaluate((0, 1, 0, 0)) == 0
    assert p.evaluate((1, 1, 1, 2)) == 1


def test_partial():
    assert FERMAT.partial(3) == 3 * W ** 2


@given(a=nonzero_rationals, b=nonzero_rationals)
def test_rational_inverse_roundtrip(a, b):
    assert (a / b) * (b / a) == 1


@given(a=rationals, b=rationals, c=rationals)
def test_rational_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


# -- normal form ---------------------------------------------------------------


def test_normal_form_single_substitution():
    p = W ** 3 * X
    expected = -(X ** 4) - X * Y ** 3 - X * Z ** 3
    assert normal_form(p, FERMAT, 3) == expected


def test_normal_form_already_reduced():
    p = W ** 2 * X + Y * Z * W
    assert normal_form(p, FERMAT, 3) == p


def test_normal_form_of_relation_is_zero():
    assert not normal_form(FERMAT, FERMAT, 3)


def test_normal_form_quadric_leading_monomial():
    quadric = X * W - Y * Z
    # x*w is the leading monomial, so it rewrites to y*z
    assert normal_form(X * W, quadric) == Y * Z


def test_divmod_reconstructs():
    p = W ** 3 * X + X * Y * Z * W
    q, r = poly_divmod(p, FERMAT, 3)
    assert q * FERMAT + r == p


@given(homog_cubics())
@settings(max_examples=60)
def test_normal_form_idempotent(p):
    r = normal_form(p, FERMAT, 3)
    assert normal_form(r, FERMAT, 3) == r


@given(homog_cubics(), homog_cubics())
@settings(max_examples=60)
def test_normal_form_linear(p, q):
    lhs = normal_form(p + q, FERMAT, 3)
    rhs = normal_form(p, FERMAT, 3) + normal_form(q, FERMAT, 3)
    assert lhs == rhs


@given(homog_cubics())
@settings(max_examples=60)
def test_difference_is_divisible_by_relation(p):
    q, r = poly_divmod(p, FERMAT, 3)
    assert p - r == q * FERMAT


# -- common projective zeros ----------------------------------------------------


def test_coordinate_forms_have_no_common_zero():
    assert not has_projective_common_zero([x0, x1, x2])


def test_shared_zero_detected():
    # x^2 and x*y both vanish at (0:0:1)
    assert has_projective_common_zero([x0 ** 2, x0 * x1])


def test_fermat_partials_have_no_common_zero():
    assert not has_projective_common_zero([FERMAT.partial(i) for i in range(4)])


def test_singular_cubic_partials_share_a_zero():
    # y^2*z = x^3 + x^2*z has a node at (0:0:1)
    nodal = Y ** 2 * Z - X ** 3 - X ** 2 * Z
    partials = [nodal.partial(i) for i in range(4)]
    assert has_projective_common_zero([p for p in partials if p])


def test_nonzero_constant_blocks_common_zeros():
    one = HomogPoly.constant(3, 5)
    assert not has_projective_common_zero([one, x0])
