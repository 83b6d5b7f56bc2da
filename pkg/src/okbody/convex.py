"""Exact rational convex geometry at desk scale.

Polytopes are stored by their canonical vertex list: the minimal set of
points whose convex hull is the polytope, lexicographically sorted.  Two
polytopes are equal exactly when their canonical lists are identical, so no
tolerance ever enters.  Hull membership is decided by an exact phase-1
simplex; facets of full-dimensional polytopes are enumerated from the vertex
list and carry primitive integer inward normals, which also provide the rays
of the normal fan (the combinatorial data of the associated toric variety).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .linalg import kernel_basis, nonnegative_solution_exists, rank
from .polynomials import Scalar

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class GradedPoint:
    """A valuation vector together with the level m of the graded piece it
    came from; the pair is one lattice point of the graded value semigroup."""

    value: tuple[int, ...]
    level: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("graded points live at level >= 1")
        if any(v < 0 for v in self.value):
            raise ValueError("valuation vectors are nonnegative")

    def quotient(self) -> Point:
        return tuple(Fraction(v, self.level) for v in self.value)


@dataclass(frozen=True)
class RationalPolytope:
    """Canonical form: the vertex list is minimal and lex-sorted."""

    dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        if any(len(v) != self.dim for v in self.vertices):
            raise ValueError("vertex of wrong dimension")

    def contains_point(self, point: Sequence[Scalar]) -> bool:
        pt = _as_point(point)
        if len(pt) != self.dim:
            raise ValueError("dimension mismatch")
        if self.is_full_dimensional():
            return all(_dot(normal, pt) >= offset
                       for normal, offset in self.facets())
        return in_convex_hull(pt, self.vertices)

    def is_full_dimensional(self) -> bool:
        if not self.vertices:
            return False
        v0 = self.vertices[0]
        diffs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
        return rank(diffs) == self.dim

    def facets(self) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
        """Inward facet inequalities (a, beta) with a . x >= beta on the
        polytope, a a primitive integer vector.  Full-dimensional only."""
        return _facets(self)

    def __str__(self) -> str:
        rows = [" (" + ", ".join(str(c) for c in v) + ")" for v in self.vertices]
        return "polytope with vertices" + "".join(rows)


def _as_point(values: Sequence[Scalar]) -> Point:
    return tuple(Fraction(v) for v in values)


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def in_convex_hull(point: Sequence[Scalar], generators: Iterable[Sequence[Scalar]]
                   ) -> bool:
    """Exact membership of a point in the convex hull of finitely many
    points, via nonnegative solvability of the barycentric system."""
    gens = [_as_point(g) for g in generators]
    if not gens:
        return False
    pt = _as_point(point)
    columns = [g + (Fraction(1),) for g in gens]
    return nonnegative_solution_exists(columns, pt + (Fraction(1),))


def convex_hull(points: Iterable[Sequence[Scalar]]) -> RationalPolytope:
    """Minimal vertex set of the convex hull, exactly.

    Points far from the centroid are inserted first so that the incremental
    candidate set stays small; a final pass removes every candidate that lies
    in the hull of the others, which handles all degeneracies (collinear
    points, repeated points, lower-dimensional hulls).
    """
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("mixed dimensions")
    centroid = tuple(sum(p[i] for p in pts) / len(pts) for i in range(dim))
    pts.sort(key=lambda p: (sum((a - b) ** 2 for a, b in zip(p, centroid)), p),
             reverse=True)
    candidates: list[Point] = []
    for p in pts:
        if not in_convex_hull(p, candidates):
            candidates.append(p)
    vertices = list(candidates)
    for p in candidates:
        rest = [q for q in vertices if q != p]
        if in_convex_hull(p, rest):
            vertices = rest
    return RationalPolytope(dim, tuple(sorted(vertices)))


def cone_slice(points: Iterable[GradedPoint]) -> RationalPolytope:
    """Height-one slice of the cone generated by finitely many graded
    points: the convex hull of value/level over the input."""
    quotients = [p.quotient() for p in points]
    if not quotients:
        raise ValueError("empty input")
    return convex_hull(quotients)


def dilate(polytope: RationalPolytope, factor: Scalar) -> RationalPolytope:
    c = Fraction(factor)
    if c <= 0:
        raise ValueError("dilation factor must be positive")
    scaled = [tuple(c * x for x in v) for v in polytope.vertices]
    return RationalPolytope(polytope.dim, tuple(sorted(scaled)))


def polytope_equal(a: RationalPolytope, b: RationalPolytope) -> bool:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return a.vertices == b.vertices


def polytope_subset(inner: RationalPolytope, outer: RationalPolytope) -> bool:
    return all(outer.contains_point(v) for v in inner.vertices)


def scaled_simplex(n: int, c: int, d: int) -> RationalPolytope:
    """The simplex with vertices 0, c*e_1, ..., c*e_{n-1} and c*d*e_n."""
    if n < 1 or c < 1 or d < 1:
        raise ValueError("n, c and d must be positive")
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n - 1):
        verts.append(tuple(Fraction(c if j == i else 0) for j in range(n)))
    verts.append(tuple(Fraction(c * d if j == n - 1 else 0) for j in range(n)))
    return RationalPolytope(n, tuple(sorted(verts)))


def _primitive(vector: Sequence[Fraction]) -> tuple[tuple[int, ...], Fraction]:
    """Scale a rational vector to a primitive integer vector; returns the
    integer vector and the positive factor that was divided out."""
    denom = 1
    for v in vector:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(v // g for v in ints), Fraction(g, denom)


def _facets(polytope: RationalPolytope
            ) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    n = polytope.dim
    verts = polytope.vertices
    if not polytope.is_full_dimensional():
        raise ValueError("polytope is not full-dimensional")
    found: dict[tuple[tuple[int, ...], Fraction], None] = {}
    for subset in combinations(verts, n):
        base = subset[0]
        rows = [tuple(a - b for a, b in zip(v, base)) for v in subset[1:]]
        kernel = kernel_basis(rows, n)
        if len(kernel) != 1:
            continue  # the subset does not span a hyperplane
        normal = kernel[0]
        offset = _dot(normal, base)
        signs = {(_dot(normal, v) - offset > 0) - (_dot(normal, v) - offset < 0)
                 for v in verts}
        if 1 in signs and -1 in signs:
            continue
        if -1 in signs:  # flip to make the normal inward
            normal = [-x for x in normal]
            offset = -offset
        prim, scale = _primitive(normal)
        found[(prim, offset / scale)] = None
    return tuple(sorted(found))


def normal_fan_rays(polytope: RationalPolytope) -> tuple[tuple[int, ...], ...]:
    """Primitive inward facet normals, lex-sorted: the rays of the normal fan
    of the polytope, i.e. the fan of the toric variety it defines."""
    return tuple(sorted(normal for normal, _offset in _facets(polytope)))


def polytope_to_json(polytope: RationalPolytope) -> str:
    """Canonical UTF-8 text form, bit-exact across runs: rationals are
    rendered as "numerator/denominator"."""
    payload = {
        "dim": polytope.dim,
        "vertices": [[f"{c.numerator}/{c.denominator}" for c in v]
                     for v in polytope.vertices],
    }
    return json.dumps(payload, indent=2) + "\n"


def polytope_from_json(text: str) -> RationalPolytope:
    data = json.loads(text)
    verts = tuple(tuple(Fraction(c) for c in v) for v in data["vertices"])
    return RationalPolytope(int(data["dim"]), verts)
