"""Graded value semigroups and their body estimates.

For a case study with very ample class scaled by c, two graded linear
systems are available at each level m:

  complete  the full degree-(m*c) graded piece of the coordinate ring,
  powers    the span of all m-fold products of level-1 elements.

The value set of a level is the set of valuation vectors of the nonzero
elements of its span.  It is computed by triangularization: whenever two
basis elements share a valuation vector, the ratio of their leading units
gives the unique combination that strictly increases the later element's
vector (lexicographically), and the process stops when all vectors are
distinct.  The value set then has exactly as many elements as the dimension
of the span.

Collecting the value sets of levels 1..M gives a finite piece of the graded
value semigroup; its cone slice at height one is an inner estimate of the
limit body.  When every vertex of a candidate polytope that is also a valid
outer bound already occurs among the level-1 vectors, the semigroup
generated by the full system is finitely generated (the vertex criterion),
and the body equals the candidate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .convex import GradedPoint, RationalPolytope, cone_slice
from .linalg import independent_indices
from .polynomials import (HomogPoly, graded_monomials, leading_monomial,
                          normal_form)
from .valuation import Flag, valuation_with_unit
from .varieties import CaseStudy

KINDS = ("powers", "complete")

Vector = tuple[int, ...]


class GradedSystem:
    """Per-level bases of one graded linear system, cached."""

    def __init__(self, case: CaseStudy, kind: str):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        self.case = case
        self.kind = kind
        self._bases: dict[int, tuple[HomogPoly, ...]] = {}

    def basis(self, level: int) -> tuple[HomogPoly, ...]:
        if level < 1:
            raise ValueError("levels start at 1")
        cached = self._bases.get(level)
        if cached is None:
            cached = self._compute_basis(level)
            self._bases[level] = cached
        return cached

    def dimension(self, level: int) -> int:
        return len(self.basis(level))

    def _standard_monomials(self, degree: int) -> tuple[Vector, ...]:
        """Monomials of the given degree that are reduced modulo the
        relation (not divisible by its leading monomial)."""
        case = self.case
        monos = graded_monomials(case.ambient_vars, degree)
        if case.relation is None:
            return monos
        lm = leading_monomial(case.relation, case.ambient_vars - 1)
        return tuple(m for m in monos
                     if not all(a >= b for a, b in zip(m, lm)))

    def _compute_basis(self, level: int) -> tuple[HomogPoly, ...]:
        case = self.case
        degree = case.section_degree(level)
        if self.kind == "complete" or level == 1:
            return tuple(HomogPoly.monomial(m)
                         for m in self._standard_monomials(degree))
        level_one = self.basis(1)
        coords = self._standard_monomials(degree)
        products = []
        seen = set()
        for combo in combinations_with_replacement(level_one, level):
            product = combo[0]
            for factor in combo[1:]:
                product = product * factor
            product = case.reduce(product)
            key = tuple(sorted(product.terms.items()))
            if key in seen:
                continue
            seen.add(key)
            products.append(product)
        vectors = [p.coefficient_vector(coords) for p in products]
        keep = independent_indices(vectors)
        return tuple(products[i] for i in keep)


def graded_system_basis(case: CaseStudy, kind: str, level: int
                        ) -> tuple[HomogPoly, ...]:
    return GradedSystem(case, kind).basis(level)


def value_set(basis: Sequence[HomogPoly], flag: Flag) -> tuple[Vector, ...]:
    """All valuation vectors of nonzero elements of the span of the basis,
    lex-sorted.  The basis must be linearly independent modulo the relation;
    the result has exactly len(basis) elements.

    Ties are always broken at the lexicographically smallest shared vector,
    replacing the later of the two basis elements by the unit-ratio
    combination that strictly increases its vector.
    """
    sections = list(basis)
    if not sections:
        return ()
    data = [valuation_with_unit(s, flag) for s in sections]
    degree = sections[0].degree
    relation = flag.relation
    curve_degree = (flag.final_stage.relation.degree
                    if flag.final_stage.relation is not None else 1)
    # each recombination strictly increases one vector inside the box
    # bounded by the section degree (times the curve degree in the last
    # coordinate), so the lattice size bounds the number of rounds
    lattice = (degree + 1) ** (flag.n - 1) * (degree * curve_degree + 1)
    max_rounds = len(sections) * lattice + 10
    for _round in range(max_rounds):
        groups: dict[Vector, list[int]] = {}
        for index, (vec, _unit) in enumerate(data):
            groups.setdefault(vec, []).append(index)
        collisions = sorted(v for v, idxs in groups.items() if len(idxs) > 1)
        if not collisions:
            return tuple(sorted(vec for vec, _unit in data))
        first, later = groups[collisions[0]][:2]
        ratio = data[later][1] / data[first][1]
        combined = sections[later] - ratio * sections[first]
        if relation is not None:
            combined = normal_form(combined, relation)
        if not combined:
            raise ValueError("basis is not linearly independent modulo the "
                             "relation")
        sections[later] = combined
        data[later] = valuation_with_unit(combined, flag)
    raise RuntimeError("triangularization failed to terminate within the "
                       "value bound; this indicates an implementation bug")


@dataclass(frozen=True)
class OkounkovSemigroup:
    """The enumerated levels 1..max_level of the graded value semigroup of
    one case study and one kind of graded system."""

    case: CaseStudy
    kind: str
    max_level: int
    levels: dict[int, tuple[Vector, ...]]

    def level(self, m: int) -> tuple[Vector, ...]:
        return self.levels[m]

    def graded_points(self) -> list[GradedPoint]:
        return [GradedPoint(vec, m)
                for m in sorted(self.levels)
                for vec in self.levels[m]]


def semigroup(case: CaseStudy, kind: str, max_level: int) -> OkounkovSemigroup:
    """Enumerate value sets for all levels 1..max_level."""
    if max_level < 1:
        raise ValueError("max_level must be at least 1")
    system = GradedSystem(case, kind)
    levels = {m: value_set(system.basis(m), case.flag)
              for m in range(1, max_level + 1)}
    return OkounkovSemigroup(case, kind, max_level, levels)


def body_estimate(sg: OkounkovSemigroup) -> RationalPolytope:
    """Height-one cone slice over every enumerated graded point: an exact
    inner approximation of the limit body, monotone in max_level."""
    return cone_slice(sg.graded_points())


def vertex_criterion(candidate: RationalPolytope,
                     level_one: Iterable[Vector]) -> bool:
    """True when every vertex of the candidate polytope is an integer point
    occurring among the level-1 valuation vectors.  Combined with the
    candidate being a valid outer bound, this certifies finite generation of
    the graded value semigroup and pins the body to the candidate."""
    available = set(level_one)
    for vertex in candidate.vertices:
        if any(c.denominator != 1 for c in vertex):
            return False
        if tuple(int(c) for c in vertex) not in available:
            return False
    return True


def generation_degree(sg: OkounkovSemigroup, kmax: int) -> int | None:
    """Smallest k <= kmax such that every enumerated graded point above
    level k is a sum of enumerated graded points of level <= k (brute-force
    decomposition search), or None if no such k exists below the bound.

    This is an empirical witness on the enumerated levels only; it is never
    a certificate by itself.
    """
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    zero = (0,) * len(sg.levels[1][0])
    for k in range(1, kmax + 1):
        generated: dict[int, set[Vector]] = {0: {zero}}
        ok = True
        for m in range(1, sg.max_level + 1):
            reachable: set[Vector] = set()
            for j in range(1, min(k, m) + 1):
                for prev in generated[m - j]:
                    for vec in sg.levels[j]:
                        reachable.add(tuple(a + b for a, b in zip(prev, vec)))
            generated[m] = reachable
            if m > k and not set(sg.levels[m]) <= reachable:
                ok = False
                break
        if ok:
            return k
    return None


def semigroup_to_json(sg: OkounkovSemigroup) -> str:
    """Canonical UTF-8 text form with integer entries, levels in increasing
    order and vectors lex-sorted.  Bit-exact across runs."""
    payload = {
        "case": sg.case.name,
        "kind": sg.kind,
        "M": sg.max_level,
        "levels": {str(m): [list(vec) for vec in sg.levels[m]]
                   for m in sorted(sg.levels)},
    }
    return json.dumps(payload, indent=2) + "\n"
