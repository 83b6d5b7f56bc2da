import random
from fractions import Fraction

import pytest

from okbody.polynomials import HomogPoly, graded_monomials
from okbody.series import series_solve_branch, affine_chart_expansion, eval_bivar
from okbody.valuation import (Flag, ZeroSectionError, flag_valuation,
                              leading_unit, ord_at_point_on_curve,
                              order_along_hypersurface, restrict_section,
                              valuation_with_unit)

from oracles import oracle_valuation

X, Y, Z, W = (HomogPoly.variable(4, i) for i in range(4))
FERMAT = X ** 3 + Y ** 3 + Z ** 3 + W ** 3
PLANE_CUBIC = (HomogPoly.variable(3, 0) ** 3 + HomogPoly.variable(3, 1) ** 3
               + HomogPoly.variable(3, 2) ** 3)


# -- orders along a hypersurface ------------------------------------------------


def test_order_of_explicit_power():
    assert order_along_hypersurface(W ** 2 * X, W, FERMAT) == 2


def test_order_found_through_the_relation():
    # x^3+y^3+z^3 = -w^3 on the Fermat cubic
    assert order_along_hypersurface(X ** 3 + Y ** 3 + Z ** 3, W, FERMAT) == 3


def test_order_of_nonvanishing_section():
    assert order_along_hypersurface(X, W, FERMAT) == 0


def test_order_rejects_zero_section():
    with pytest.raises(ZeroSectionError):
        order_along_hypersurface(FERMAT, W, FERMAT)


def test_order_consistency_multiplying_by_h():
    rng = random.Random(3)
    monos = graded_monomials(4, 2)
    for _ in range(15):
        terms = {m: rng.randrange(-3, 4) for m in rng.sample(monos, 3)}
        s = HomogPoly(4, 2, terms)
        if not s:
            continue
        base = order_along_hypersurface(s, W, FERMAT)
        assert order_along_hypersurface(s * W, W, FERMAT) == base + 1


# -- restriction -----------------------------------------------------------------


def test_restrict_explicit_power():
    restricted = restrict_section(W ** 2 * X, W, 2, FERMAT)
    assert restricted == HomogPoly.variable(3, 0)


def test_restrict_through_relation_gives_constant():
    restricted = restrict_section(X ** 3 + Y ** 3 + Z ** 3, W, 3, FERMAT)
    assert restricted == HomogPoly.constant(3, -1)


def test_restrict_order_zero():
    assert restrict_section(X, W, 0, FERMAT) == HomogPoly.variable(3, 0)


def test_restrict_with_wrong_order_rejected():
    with pytest.raises(ValueError):
        restrict_section(W ** 2 * X, W, 1, FERMAT)


# -- vanishing order at a point on a curve ----------------------------------------


def test_ord_of_coordinate_at_flex():
    z3 = HomogPoly.variable(3, 2)
    assert ord_at_point_on_curve(z3, PLANE_CUBIC, (1, -1, 0),
                                 chart_var=0, param_var=2) == 1


def test_ord_of_flex_tangent():
    tangent = HomogPoly.linear_form([1, 1, 0])
    assert ord_at_point_on_curve(tangent, PLANE_CUBIC, (1, -1, 0),
                                 chart_var=0, param_var=2) == 3


def test_ord_of_unit_section():
    x3 = HomogPoly.variable(3, 0)
    assert ord_at_point_on_curve(x3, PLANE_CUBIC, (1, -1, 0),
                                 chart_var=0, param_var=2) == 0


def test_ord_certified_at_double_precision():
    tangent = HomogPoly.linear_form([1, 1, 0])
    for precision in (8, 16):
        u = series_solve_branch(PLANE_CUBIC, (1, -1, 0), precision,
                                chart_var=0, param_var=2, dep_var=1)
        f = affine_chart_expansion(tangent, (1, -1, 0), 0, 2, 1)
        assert eval_bivar(f, u).order() == 3


def test_ord_rejects_section_vanishing_on_curve():
    with pytest.raises(ZeroSectionError):
        ord_at_point_on_curve(PLANE_CUBIC, PLANE_CUBIC, (1, -1, 0),
                              chart_var=0, param_var=2)


def test_ord_beyond_initial_precision():
    # (x+y)^3 vanishes to order 9 > 2*deg+2 = 8, forcing the precision
    # escalation before the order is certified
    cube = HomogPoly.linear_form([1, 1, 0]) ** 3
    assert ord_at_point_on_curve(cube, PLANE_CUBIC, (1, -1, 0),
                                 chart_var=0, param_var=2) == 9


# -- full flag valuations ----------------------------------------------------------


def test_p2_coordinate_valuations(p2):
    x0, x1, x2 = (HomogPoly.variable(3, i) for i in range(3))
    assert flag_valuation(x0, p2.flag) == (0, 0)
    assert flag_valuation(x1, p2.flag) == (1, 0)
    assert flag_valuation(x2, p2.flag) == (0, 1)


def test_fermat_flag_valuations(fermat):
    assert flag_valuation(W, fermat.flag) == (1, 0)
    assert flag_valuation(X + Y, fermat.flag) == (0, 3)


def test_nowhere_vanishing_section_has_zero_vector(quadric):
    assert flag_valuation(Y, quadric.flag) == (0, 0)


def test_leading_units(p2, fermat):
    x2 = HomogPoly.variable(3, 2)
    assert leading_unit(x2, p2.flag) == 1
    assert leading_unit(5 * x2, p2.flag) == 5
    assert leading_unit(X + Y, fermat.flag) == Fraction(-1, 3)


def test_zero_section_rejected(fermat):
    with pytest.raises(ZeroSectionError):
        flag_valuation(HomogPoly.zero(4, 3), fermat.flag)
    with pytest.raises(ZeroSectionError):
        flag_valuation(FERMAT, fermat.flag)


# -- agreement with the independent local-expansion oracles --------------------------


def test_valuations_match_oracles_on_monomial_bases(p2, p3, quadric, fermat):
    for case in (p2, p3, quadric, fermat):
        for degree in (1, 2):
            for mono in graded_monomials(case.ambient_vars, degree):
                section = HomogPoly.monomial(mono)
                if case.relation is not None and not case.reduce(section):
                    continue
                assert valuation_with_unit(section, case.flag) == \
                    oracle_valuation(case.name, section)


def test_valuations_match_oracles_on_random_sections(quadric, fermat):
    rng = random.Random(11)
    for case in (quadric, fermat):
        monos = graded_monomials(4, 2)
        for _ in range(25):
            terms = {m: rng.randrange(-4, 5) for m in rng.sample(monos, 3)}
            section = HomogPoly(4, 2, terms)
            if not section or not case.reduce(section):
                continue
            assert valuation_with_unit(section, case.flag) == \
                oracle_valuation(case.name, section)


# -- additivity and multiplicativity --------------------------------------------------


def _random_sections(case, degree, count, seed):
    rng = random.Random(seed)
    monos = graded_monomials(case.ambient_vars, degree)
    out = []
    while len(out) < count:
        terms = {m: rng.randrange(-3, 4) for m in rng.sample(monos, 2)}
        section = HomogPoly(case.ambient_vars, degree, terms)
        if section and (case.relation is None or case.reduce(section)):
            out.append(section)
    return out


def test_valuation_additive_on_products(p2, quadric, fermat):
    for case in (p2, quadric, fermat):
        pairs = zip(_random_sections(case, 1, 20, seed=5),
                    _random_sections(case, 2, 20, seed=6))
        for s, t in pairs:
            vs, us = valuation_with_unit(s, case.flag)
            vt, ut = valuation_with_unit(t, case.flag)
            product = case.reduce(s * t)
            vp, up = valuation_with_unit(product, case.flag)
            assert vp == tuple(a + b for a, b in zip(vs, vt))
            assert up == us * ut


# -- flag construction validation ------------------------------------------------------


def test_flag_rejects_point_off_locus():
    x0, x1, x2 = (HomogPoly.variable(3, i) for i in range(3))
    with pytest.raises(ValueError):
        Flag(3, None, [x1], x2, (1, 1, 0), chart_var=0, parameter_var=2)


def test_flag_rejects_chart_on_eliminated_variable():
    x0, x1, x2 = (HomogPoly.variable(3, i) for i in range(3))
    with pytest.raises(ValueError):
        Flag(3, None, [x1], x2, (1, 0, 0), chart_var=1, parameter_var=2)


def test_flag_rejects_wrong_length():
    x0, x1, x2 = (HomogPoly.variable(3, i) for i in range(3))
    with pytest.raises(ValueError):
        Flag(3, None, [x1, x2], x2, (1, 0, 0), chart_var=0, parameter_var=2)
