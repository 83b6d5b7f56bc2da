"""Flag valuations of sections by iterated vanishing orders.

A flag on an n-dimensional hypersurface (or projective space) is a chain of
subvarieties cut by linear forms, ending in a rational point.  The valuation
of a nonzero section is computed step by step:

  * the order along the next flag member is the largest k such that the
    section lies in the graded ideal (h^k) + (F), found by exact linear
    algebra on monomial coefficient vectors;
  * the section is divided by h^k and restricted (the linear form h is
    eliminated by substitution), producing a section on the next member;
  * the final entry is the vanishing order at the point, read off from a
    power-series parametrization of the last curve (or directly when the
    last member is a line).

The leading unit is the first nonzero series coefficient after all orders
have been divided out; it is the datum that lets two sections with equal
valuation be combined into one of strictly larger valuation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import SpanSolver
from .polynomials import HomogPoly, Scalar, graded_monomials, normal_form
from .series import (PRECISION_CAP, PrecisionError,
                     affine_chart_expansion, eval_bivar, series_solve_branch)


class ZeroSectionError(ValueError):
    """The section vanishes identically modulo the defining relation, so its
    valuation is undefined."""


@dataclass
class _Step:
    """One restriction step, expressed in the coordinates current when the
    step is reached."""

    form: HomogPoly
    relation: HomogPoly | None
    pivot: int
    replacement: tuple[Fraction, ...]

    def eliminate(self, poly: HomogPoly) -> HomogPoly:
        return poly.eliminate(self.pivot, self.replacement)


@dataclass
class _FinalStage:
    num_vars: int                 # 3 for a plane curve, 2 for a line
    relation: HomogPoly | None    # the plane-curve equation, if any
    point: tuple[Fraction, ...]
    chart: int
    param: int
    dep: int | None


class Flag:
    """A full flag: linear step forms, a final linear form, and the point,
    together with the fixed affine chart and local parameter used at the
    point.  Chart and parameter are given as ambient variable indices and
    must survive all eliminations."""

    def __init__(self, ambient_vars: int, relation: HomogPoly | None,
                 steps: Sequence[HomogPoly], final_form: HomogPoly,
                 point: Sequence[Scalar], chart_var: int, parameter_var: int):
        self.ambient_vars = ambient_vars
        self.relation = relation
        self.steps = tuple(steps)
        self.final_form = final_form
        self.point = tuple(Fraction(v) for v in point)
        self.chart_var = chart_var
        self.parameter_var = parameter_var
        self._span_cache: dict[tuple[int, int, int], SpanSolver] = {}
        self._validate()
        self.stages, self.final_stage = self._build_stages()

    @property
    def n(self) -> int:
        """Dimension of the variety the flag lives on."""
        return len(self.steps) + 1

    def _validate(self) -> None:
        if len(self.point) != self.ambient_vars or not any(self.point):
            raise ValueError("point must be a nonzero ambient point")
        for form in (*self.steps, self.final_form):
            if form.num_vars != self.ambient_vars or form.degree != 1 or not form:
                raise ValueError("flag forms must be nonzero ambient linear forms")
            if form.evaluate(self.point):
                raise ValueError("the flag point must lie on every flag form")
        if self.relation is not None:
            if self.relation.num_vars != self.ambient_vars or not self.relation:
                raise ValueError("relation must be a nonzero ambient form")
            if self.relation.evaluate(self.point):
                raise ValueError("the flag point must lie on the hypersurface")
        if self.chart_var == self.parameter_var:
            raise ValueError("chart and parameter variables must differ")
        if self.point[self.chart_var] == 0:
            raise ValueError("point is outside the chosen affine chart")

    def _build_stages(self) -> tuple[list[_Step], _FinalStage]:
        alive = list(range(self.ambient_vars))
        relation = self.relation
        pending = list(self.steps)
        final_form = self.final_form
        point = list(self.point)
        stages: list[_Step] = []
        for index, form in enumerate(pending):
            coeffs = [form.terms.get(tuple(1 if j == i else 0
                                           for j in range(form.num_vars)),
                                     Fraction(0))
                      for i in range(form.num_vars)]
            pivot = max(i for i, c in enumerate(coeffs) if c)
            replacement = tuple(
                Fraction(0) if i == pivot else -coeffs[i] / coeffs[pivot]
                for i in range(form.num_vars))
            step = _Step(form, relation, pivot, replacement)
            stages.append(step)
            if alive[pivot] in (self.chart_var, self.parameter_var):
                raise ValueError("chart or parameter variable is eliminated "
                                 "by a flag step")
            if relation is not None:
                relation = step.eliminate(relation)
                if not relation:
                    raise ValueError("a flag step divides the relation")
            pending[index + 1:] = [step.eliminate(f) for f in pending[index + 1:]]
            final_form = step.eliminate(final_form)
            del point[pivot]
            del alive[pivot]
        num_vars = self.ambient_vars - len(self.steps)
        if num_vars not in (2, 3):
            raise ValueError("flag does not end on a curve")
        if (num_vars == 3) != (relation is not None):
            raise ValueError("final stage must be a plane curve with a "
                             "relation or a line without one")
        chart = alive.index(self.chart_var)
        param = alive.index(self.parameter_var)
        dep = None
        if num_vars == 3:
            dep = next(i for i in range(3) if i not in (chart, param))
        final = _FinalStage(num_vars, relation, tuple(point), chart, param, dep)
        return stages, final

    def membership_solver(self, stage_index: int, k: int, degree: int
                          ) -> SpanSolver:
        """Echelonized span of { h^k * monomials } + { F * monomials } in the
        given degree, cached per flag (the rows do not depend on the
        section being tested)."""
        key = (stage_index, k, degree)
        solver = self._span_cache.get(key)
        if solver is None:
            step = self.stages[stage_index]
            rows = _ideal_rows(step.form, k, step.relation, degree)
            solver = SpanSolver(rows)
            self._span_cache[key] = solver
        return solver


def _ideal_rows(h: HomogPoly, k: int, relation: HomogPoly | None, degree: int
                ) -> list[tuple[Fraction, ...]]:
    monos = graded_monomials(h.num_vars, degree)
    rows = []
    hk = h ** k
    for mu in graded_monomials(h.num_vars, degree - k):
        rows.append((hk * HomogPoly.monomial(mu)).coefficient_vector(monos))
    if relation is not None and degree >= relation.degree:
        for mu in graded_monomials(h.num_vars, degree - relation.degree):
            rows.append((relation * HomogPoly.monomial(mu))
                        .coefficient_vector(monos))
    return rows


def _check_nonzero(section: HomogPoly, relation: HomogPoly | None) -> None:
    if not section:
        raise ZeroSectionError("zero section")
    if relation is not None and not normal_form(section, relation):
        raise ZeroSectionError("section vanishes modulo the relation")


def _order_and_cofactor(section: HomogPoly, h: HomogPoly,
                        relation: HomogPoly | None,
                        solver_for_k=None) -> tuple[int, HomogPoly]:
    """Largest k with section in (h^k) + (relation) in its degree, together
    with the cofactor t from section = h^k t + relation * g."""
    degree = section.degree
    num_vars = section.num_vars
    if relation is None and len(h.terms) == 1:
        # h is a single variable (up to scale): the order is the minimal
        # exponent and the cofactor is an exponent shift.
        (exps, coeff), = h.terms.items()
        index = exps.index(1)
        k = min((e[index] for e in section.terms), default=0)
        if k == 0:
            return 0, section
        shifted = {e[:index] + (e[index] - k,) + e[index + 1:]: c / coeff ** k
                   for e, c in section.terms.items()}
        return k, HomogPoly(num_vars, degree - k, shifted)
    monos = graded_monomials(num_vars, degree)
    target = section.coefficient_vector(monos)
    k = 0
    cofactor = section
    while k < degree:
        if solver_for_k is not None:
            solver = solver_for_k(k + 1)
        else:
            solver = SpanSolver(_ideal_rows(h, k + 1, relation, degree))
        solution = solver.solve(target)
        if solution is None:
            break
        k += 1
        small = graded_monomials(num_vars, degree - k)
        terms = {mu: c for mu, c in zip(small, solution[:len(small)]) if c}
        cofactor = HomogPoly(num_vars, degree - k, terms)
    return k, cofactor


def order_along_hypersurface(section: HomogPoly, h: HomogPoly,
                             relation: HomogPoly | None = None) -> int:
    """Vanishing order of a section along the divisor cut by the linear form
    h on the hypersurface {relation = 0} (or on projective space)."""
    _check_nonzero(section, relation)
    return _order_and_cofactor(section, h, relation)[0]


def restrict_section(section: HomogPoly, h: HomogPoly, k: int,
                     relation: HomogPoly | None = None) -> HomogPoly:
    """Divide a section by h^k and restrict to {h = 0}: writes
    section = h^k t + relation * g and returns t with the variable pivoted by
    h eliminated.  Requires k to be the actual vanishing order."""
    _check_nonzero(section, relation)
    order, cofactor = _order_and_cofactor(section, h, relation)
    if order != k:
        raise ValueError(f"section has order {order} along the divisor, not {k}")
    coeffs = [h.terms.get(tuple(1 if j == i else 0 for j in range(h.num_vars)),
                          Fraction(0)) for i in range(h.num_vars)]
    pivot = max(i for i, c in enumerate(coeffs) if c)
    replacement = tuple(Fraction(0) if i == pivot else -coeffs[i] / coeffs[pivot]
                        for i in range(h.num_vars))
    return cofactor.eliminate(pivot, replacement)


def _ord_unit_on_line(section: HomogPoly, stage: _FinalStage
                      ) -> tuple[int, Fraction]:
    """Order and leading coefficient of a binary form at a point of a line."""
    if not section:
        raise ZeroSectionError("zero restriction on the final line")
    if section.degree == 0:
        return 0, section.evaluate(stage.point)
    scale = stage.point[stage.chart]
    offset = stage.point[stage.param] / scale
    coeffs = [Fraction(0)] * (section.degree + 1)
    from math import comb
    for exps, c in section.terms.items():
        a = exps[stage.param]
        for i in range(a + 1):
            coeffs[i] += c * comb(a, i) * offset ** (a - i)
    for k, c in enumerate(coeffs):
        if c:
            return k, c
    raise ZeroSectionError("zero restriction on the final line")


def _ord_unit_on_curve(section: HomogPoly, stage: _FinalStage
                       ) -> tuple[int, Fraction]:
    """Order and leading series coefficient of a section at the flag point of
    the final plane curve.

    The precision starts at twice the section degree and doubles on an
    all-zero prefix; the product of the section degree and the curve degree
    bounds the order of any section not vanishing on the curve, so an
    all-zero prefix past that bound certifies a zero restriction.
    """
    curve = stage.relation
    assert curve is not None and stage.dep is not None
    if not section:
        raise ZeroSectionError("zero restriction on the final curve")
    if section.degree == 0:
        return 0, section.evaluate(stage.point)
    bound = section.degree * curve.degree
    precision = 2 * section.degree + 2
    while True:
        if precision > PRECISION_CAP:
            raise PrecisionError("order search exceeded the precision cap")
        branch = series_solve_branch(curve, stage.point, precision,
                                     chart_var=stage.chart,
                                     param_var=stage.param, dep_var=stage.dep)
        expansion = affine_chart_expansion(section, stage.point, stage.chart,
                                           stage.param, stage.dep)
        values = eval_bivar(expansion, branch)
        order = values.order()
        if order is not None:
            return order, values[order]
        if precision > bound:
            raise ZeroSectionError("section vanishes identically on the "
                                   "final curve")
        precision *= 2


def ord_at_point_on_curve(section: HomogPoly, curve: HomogPoly,
                          point: Sequence[Scalar], *, chart_var: int,
                          param_var: int) -> int:
    """Vanishing order of a section of a plane curve at a smooth rational
    point, in the chosen chart and parameter."""
    dep = next(i for i in range(3) if i not in (chart_var, param_var))
    stage = _FinalStage(3, curve, tuple(Fraction(v) for v in point),
                        chart_var, param_var, dep)
    return _ord_unit_on_curve(section, stage)[0]


def valuation_with_unit(section: HomogPoly, flag: Flag
                        ) -> tuple[tuple[int, ...], Fraction]:
    """The full valuation vector together with the leading unit."""
    _check_nonzero(section, flag.relation)
    entries = []
    current = section
    for index, step in enumerate(flag.stages):
        degree = current.degree

        def cached(k: int, _index=index, _degree=degree) -> SpanSolver:
            return flag.membership_solver(_index, k, _degree)

        use_cache = not (step.relation is None and len(step.form.terms) == 1)
        k, cofactor = _order_and_cofactor(
            current, step.form, step.relation,
            solver_for_k=cached if use_cache else None)
        entries.append(k)
        current = step.eliminate(cofactor)
    stage = flag.final_stage
    if stage.num_vars == 2:
        order, unit = _ord_unit_on_line(current, stage)
    else:
        order, unit = _ord_unit_on_curve(current, stage)
    entries.append(order)
    return tuple(entries), unit


def flag_valuation(section: HomogPoly, flag: Flag) -> tuple[int, ...]:
    """The valuation vector (order along each flag member, then the order at
    the point).  Additive on products of sections."""
    return valuation_with_unit(section, flag)[0]


def leading_unit(section: HomogPoly, flag: Flag) -> Fraction:
    """The scalar left after dividing out the full valuation: the first
    nonzero local series coefficient at the flag point.  Multiplicative on
    products of sections."""
    return valuation_with_unit(section, flag)[1]
