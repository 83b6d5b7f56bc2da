"""Case studies: explicit flagged varieties on which the value semigroup and
body computations run, plus the exact flag verifier.

Shipped cases (name, ambient equation, flag):

  p2              projective plane, coordinate flag
  p3              projective 3-space, coordinate flag
  quadric_surface {x*w - y*z = 0} in P^3; the flag member is the smooth conic
                  plane section {x = w}, the point is (0:1:0:0) and the final
                  form is the tangent plane {z = 0}, which meets the conic in
                  that single point with contact order 2.
  fermat_cubic    {x^3 + y^3 + z^3 + w^3 = 0} in P^3; the flag member is the
                  smooth plane cubic {w = 0}, the point is the rational flex
                  (1:-1:0:0) and the final form is the flex tangent plane
                  {x + y = 0}, contact order 3.

A fifth case, quadric_threefold, shares the same machinery but is gated
behind an experimental flag.

verify_flag checks each case with exact arithmetic: the final curve is
smooth (no common projective zero of the partials, a full-rank resultant
certificate), the point lies on everything, and the final form meets the
final curve in the single flag point (its vanishing order there equals the
full intersection number d).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import (HomogPoly, has_projective_common_zero,
                          normal_form)
from .valuation import Flag, ZeroSectionError, valuation_with_unit

CASE_NAMES = ("p2", "p3", "quadric_surface", "fermat_cubic")
EXPERIMENTAL_CASE_NAMES = ("quadric_threefold",)
_EXPERIMENTAL_ENV = "OKBODY_EXPERIMENTAL"


@dataclass
class CaseStudy:
    """A variety with its defining relation, flag and numerical metadata:
    n = dimension, r = index, c scales the very ample class, d is the top
    self-intersection of the primitive class."""

    name: str
    ambient_vars: int
    relation: HomogPoly | None
    flag: Flag
    n: int
    r: int
    c: int
    d: int

    def reduce(self, section: HomogPoly) -> HomogPoly:
        """Canonical representative of a section modulo the relation."""
        if self.relation is None:
            return section
        return normal_form(section, self.relation)

    def section_degree(self, level: int) -> int:
        return level * self.c

    def expected_body(self):
        from .convex import scaled_simplex
        return scaled_simplex(self.n, self.c, self.d)


def _scale_monic(relation: HomogPoly) -> HomogPoly:
    from .polynomials import leading_monomial
    lm = leading_monomial(relation, relation.num_vars - 1)
    return relation * (Fraction(1) / relation.terms[lm])


def experimental_cases_enabled() -> bool:
    return os.environ.get(_EXPERIMENTAL_ENV, "") not in ("", "0")


def available_case_names() -> tuple[str, ...]:
    if experimental_cases_enabled():
        return CASE_NAMES + EXPERIMENTAL_CASE_NAMES
    return CASE_NAMES


def make_case(name: str, c: int = 1, *, experimental: bool = False) -> CaseStudy:
    """Construct a shipped case study with its hard-coded verified flag."""
    if c < 1:
        raise ValueError("c must be a positive integer")
    if name == "p2":
        x0, x1, x2 = (HomogPoly.variable(3, i) for i in range(3))
        flag = Flag(3, None, [x1], x2, (1, 0, 0),
                    chart_var=0, parameter_var=2)
        return CaseStudy("p2", 3, None, flag, n=2, r=3, c=c, d=1)
    if name == "p3":
        x0, x1, x2, x3 = (HomogPoly.variable(4, i) for i in range(4))
        flag = Flag(4, None, [x1, x2], x3, (1, 0, 0, 0),
                    chart_var=0, parameter_var=3)
        return CaseStudy("p3", 4, None, flag, n=3, r=4, c=c, d=1)
    if name == "quadric_surface":
        relation = _scale_monic(HomogPoly(4, 2, {(1, 0, 0, 1): 1,
                                                 (0, 1, 1, 0): -1}))
        step = HomogPoly.linear_form([1, 0, 0, -1])       # the plane {x = w}
        final = HomogPoly.variable(4, 2)                  # tangent plane {z = 0}
        flag = Flag(4, relation, [step], final, (0, 1, 0, 0),
                    chart_var=1, parameter_var=0)
        return CaseStudy("quadric_surface", 4, relation, flag, n=2, r=2, c=c, d=2)
    if name == "fermat_cubic":
        relation = _scale_monic(HomogPoly(4, 3, {(3, 0, 0, 0): 1,
                                                 (0, 3, 0, 0): 1,
                                                 (0, 0, 3, 0): 1,
                                                 (0, 0, 0, 3): 1}))
        step = HomogPoly.variable(4, 3)                   # the plane {w = 0}
        final = HomogPoly.linear_form([1, 1, 0, 0])       # flex tangent {x+y=0}
        flag = Flag(4, relation, [step], final, (1, -1, 0, 0),
                    chart_var=0, parameter_var=2)
        return CaseStudy("fermat_cubic", 4, relation, flag, n=2, r=1, c=c, d=3)
    if name == "quadric_threefold":
        if not (experimental or experimental_cases_enabled()):
            raise ValueError(
                "quadric_threefold is experimental; pass experimental=True "
                f"or set {_EXPERIMENTAL_ENV}=1")
        relation = _scale_monic(HomogPoly(5, 2, {(1, 0, 0, 1, 0): 1,
                                                 (0, 1, 1, 0, 0): -1,
                                                 (0, 0, 0, 0, 2): 1}))
        steps = [HomogPoly.variable(5, 4),                # the plane {v = 0}
                 HomogPoly.linear_form([1, 0, 0, -1, 0])]
        final = HomogPoly.variable(5, 2)
        flag = Flag(5, relation, steps, final, (0, 1, 0, 0, 0),
                    chart_var=1, parameter_var=0)
        return CaseStudy("quadric_threefold", 5, relation, flag,
                         n=3, r=3, c=c, d=2)
    raise ValueError(f"unknown case study {name!r}")


def make_negative_control(c: int = 1) -> CaseStudy:
    """The quadric surface flag with a non-tangent final plane {x = 0}: the
    point still lies on it, but the contact order with the conic is 1 < 2,
    so the single-point condition fails.  Shipped for verifier tests."""
    good = make_case("quadric_surface", c)
    bad_final = HomogPoly.variable(4, 0)
    flag = Flag(4, good.relation, list(good.flag.steps), bad_final,
                good.flag.point, chart_var=good.flag.chart_var,
                parameter_var=good.flag.parameter_var)
    return CaseStudy("quadric_surface_negative_control", 4, good.relation,
                     flag, n=2, r=2, c=c, d=2)


# -- flag verification -------------------------------------------------------


@dataclass(frozen=True)
class FlagCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FlagReport:
    case_name: str
    checks: tuple[FlagCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def __str__(self) -> str:
        lines = [f"flag verification for {self.case_name}:"]
        for check in self.checks:
            status = "pass" if check.passed else "FAIL"
            lines.append(f"  [{status}] {check.name}: {check.detail}")
        verdict = "all checks passed" if self.passed else "verification FAILED"
        lines.append(f"  => {verdict}")
        return "\n".join(lines)


def _smooth_hypersurface(form: HomogPoly) -> bool:
    if form.degree == 1:
        return True
    partials = [form.partial(i) for i in range(form.num_vars)]
    return not has_projective_common_zero(partials)


def verify_flag(case: CaseStudy) -> FlagReport:
    """Exact verification report for a case study's flag."""
    flag = case.flag
    checks: list[FlagCheck] = []

    if case.relation is not None:
        smooth = _smooth_hypersurface(case.relation)
        checks.append(FlagCheck(
            "ambient hypersurface smooth", smooth,
            "partials of the relation have no common projective zero"
            if smooth else "the relation defines a singular hypersurface"))

    on_all = True
    for form in (*flag.steps, flag.final_form):
        if form.evaluate(flag.point):
            on_all = False
    if case.relation is not None and case.relation.evaluate(flag.point):
        on_all = False
    checks.append(FlagCheck(
        "point on all flag members", on_all,
        "the point satisfies the relation, every step and the final form"
        if on_all else "the point misses a flag member"))

    stage = flag.final_stage
    if stage.num_vars == 2:
        checks.append(FlagCheck("final curve smooth", True,
                                "the final flag curve is a line"))
    else:
        smooth = _smooth_hypersurface(stage.relation)
        checks.append(FlagCheck(
            "final curve smooth", smooth,
            f"plane curve of degree {stage.relation.degree}: partial "
            "derivatives have no common projective zero (full-rank "
            "resultant certificate)" if smooth
            else "the final flag curve is singular"))

    try:
        value, _unit = valuation_with_unit(flag.final_form, flag)
    except (ZeroSectionError, ValueError) as exc:
        checks.append(FlagCheck(
            "single-point contact", False,
            f"valuation of the final form failed: {exc}"))
    else:
        expected = (0,) * (flag.n - 1) + (case.d,)
        ok = value == expected
        checks.append(FlagCheck(
            "single-point contact", ok,
            f"valuation of the final form is {value}, contact order "
            f"{value[-1]} against required d = {case.d}"))

    return FlagReport(case.name, tuple(checks))


# -- custom fixtures ---------------------------------------------------------


def _poly_to_obj(poly: HomogPoly | None):
    if poly is None:
        return None
    return [[f"{c.numerator}/{c.denominator}", list(exps)]
            for exps, c in poly.sorted_terms()]


def _poly_from_obj(obj, num_vars: int, what: str) -> HomogPoly:
    terms = {}
    for coeff, exps in obj:
        exps = tuple(int(e) for e in exps)
        if len(exps) != num_vars:
            raise ValueError(f"{what}: exponent tuple of wrong length")
        terms[exps] = terms.get(exps, Fraction(0)) + Fraction(coeff)
    degrees = {sum(e) for e in terms}
    if len(degrees) != 1:
        raise ValueError(f"{what}: terms are not homogeneous")
    return HomogPoly(num_vars, degrees.pop(), terms)


def case_study_to_json(case: CaseStudy) -> str:
    payload = {
        "name": case.name,
        "ambient_vars": case.ambient_vars,
        "n": case.n,
        "r": case.r,
        "c": case.c,
        "d": case.d,
        "relation": _poly_to_obj(case.relation),
        "steps": [_poly_to_obj(s) for s in case.flag.steps],
        "final_form": _poly_to_obj(case.flag.final_form),
        "point": [f"{v.numerator}/{v.denominator}" for v in case.flag.point],
        "chart_var": case.flag.chart_var,
        "parameter_var": case.flag.parameter_var,
    }
    return json.dumps(payload, indent=2) + "\n"


def case_study_from_json(text: str) -> CaseStudy:
    """Load a custom hypersurface case study.  The caller is expected to run
    verify_flag on the result before using it."""
    data = json.loads(text)
    nv = int(data["ambient_vars"])
    relation = None
    if data.get("relation") is not None:
        relation = _scale_monic(_poly_from_obj(data["relation"], nv, "relation"))
    steps = [_poly_from_obj(s, nv, "step") for s in data["steps"]]
    final = _poly_from_obj(data["final_form"], nv, "final_form")
    point = tuple(Fraction(v) for v in data["point"])
    flag = Flag(nv, relation, steps, final, point,
                chart_var=int(data["chart_var"]),
                parameter_var=int(data["parameter_var"]))
    return CaseStudy(str(data["name"]), nv, relation, flag,
                     n=int(data["n"]), r=int(data["r"]),
                     c=int(data["c"]), d=int(data["d"]))
