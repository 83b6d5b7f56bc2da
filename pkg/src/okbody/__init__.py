"""Exact computation of graded value semigroups and Okounkov bodies of
flagged projective hypersurfaces, with finite-generation certification,
toric limit data and elliptic-curve divisor utilities."""

from .convex import (GradedPoint, RationalPolytope, cone_slice, convex_hull,
                     dilate, in_convex_hull, normal_fan_rays, polytope_equal,
                     polytope_from_json, polytope_subset, polytope_to_json,
                     scaled_simplex)
from .elliptic import (INFINITY, EllipticCurveFp, divisor_class_sum,
                       random_divisor, single_point_member)
from .linalg import rat_linear_solve
from .okounkov import (GradedSystem, OkounkovSemigroup, body_estimate,
                       generation_degree, graded_system_basis, semigroup,
                       semigroup_to_json, value_set, vertex_criterion)
from .polynomials import (HomogPoly, graded_monomials,
                          has_projective_common_zero, normal_form,
                          poly_divmod)
from .series import PowerSeries, PrecisionError, series_solve_branch
from .valuation import (Flag, ZeroSectionError, flag_valuation, leading_unit,
                        ord_at_point_on_curve, order_along_hypersurface,
                        restrict_section, valuation_with_unit)
from .varieties import (CASE_NAMES, CaseStudy, FlagReport,
                        case_study_from_json, case_study_to_json, make_case,
                        make_negative_control, verify_flag)

__version__ = "0.1.0"

__all__ = [
    "CASE_NAMES", "CaseStudy", "EllipticCurveFp", "Flag", "FlagReport",
    "GradedPoint", "GradedSystem", "HomogPoly", "INFINITY", "OkounkovSemigroup",
    "PowerSeries", "PrecisionError", "RationalPolytope", "ZeroSectionError",
    "body_estimate", "case_study_from_json", "case_study_to_json",
    "cone_slice", "convex_hull", "dilate", "divisor_class_sum",
    "flag_valuation", "generation_degree", "graded_monomials",
    "graded_system_basis", "has_projective_common_zero", "in_convex_hull",
    "leading_unit", "make_case", "make_negative_control", "normal_fan_rays",
    "normal_form", "ord_at_point_on_curve", "order_along_hypersurface",
    "poly_divmod", "polytope_equal", "polytope_from_json", "polytope_subset",
    "polytope_to_json", "random_divisor", "rat_linear_solve",
    "restrict_section", "scaled_simplex", "semigroup", "semigroup_to_json",
    "series_solve_branch", "single_point_member", "value_set",
    "valuation_with_unit", "verify_flag",
]
