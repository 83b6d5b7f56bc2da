"""Short Weierstrass elliptic curves over a prime field, with exhaustive
point enumeration and the chord-tangent group law.

At desk scale the whole group E(F_p) is enumerated once, so divisor-class
computations reduce to finite group arithmetic: summing the points of an
effective divisor gives its class, and a degree-d divisor is linearly
equivalent to d times a single point exactly when that class is divisible by
d in the group.  Over a finite field the division may fail; over an
algebraically closed field it never does.
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Optional, Sequence, Union


class _Infinity:
    """The point at infinity, the identity of the group law."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

Point = Union[tuple[int, int], _Infinity]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class EllipticCurveFp:
    """y^2 = x^3 + a*x + b over F_p, p an odd prime, with nonzero
    discriminant 4a^3 + 27b^2."""

    def __init__(self, p: int, a: int, b: int):
        if not is_prime(p) or p == 2:
            raise ValueError("p must be an odd prime")
        a %= p
        b %= p
        if (4 * a ** 3 + 27 * b ** 2) % p == 0:
            raise ValueError("singular curve: discriminant vanishes")
        self.p = p
        self.a = a
        self.b = b

    @cached_property
    def points(self) -> tuple[Point, ...]:
        """All points, the point at infinity first, affine points sorted."""
        roots: dict[int, list[int]] = {}
        for y in range(self.p):
            roots.setdefault(y * y % self.p, []).append(y)
        affine = []
        for x in range(self.p):
            rhs = (x ** 3 + self.a * x + self.b) % self.p
            for y in roots.get(rhs, ()):
                affine.append((x, y))
        return (INFINITY, *sorted(affine))

    def order(self) -> int:
        return len(self.points)

    def is_on_curve(self, point: Point) -> bool:
        if point is INFINITY:
            return True
        x, y = point
        return (y * y - (x ** 3 + self.a * x + self.b)) % self.p == 0

    def _require(self, point: Point) -> None:
        if not self.is_on_curve(point):
            raise ValueError(f"{point} is not a point of the curve")

    def negate(self, point: Point) -> Point:
        self._require(point)
        if point is INFINITY:
            return INFINITY
        x, y = point
        return (x, (-y) % self.p)

    def add(self, p1: Point, p2: Point) -> Point:
        """Chord-tangent addition with the point at infinity as identity."""
        self._require(p1)
        self._require(p2)
        if p1 is INFINITY:
            return p2
        if p2 is INFINITY:
            return p1
        x1, y1 = p1
        x2, y2 = p2
        if x1 == x2 and (y1 + y2) % self.p == 0:
            return INFINITY
        if p1 == p2:
            slope = (3 * x1 * x1 + self.a) * pow(2 * y1, self.p - 2, self.p)
        else:
            slope = (y2 - y1) * pow(x2 - x1, self.p - 2, self.p)
        slope %= self.p
        x3 = (slope * slope - x1 - x2) % self.p
        y3 = (slope * (x1 - x3) - y1) % self.p
        return (x3, y3)

    def mul(self, k: int, point: Point) -> Point:
        """k-fold sum by double-and-add; negative k uses the inverse."""
        self._require(point)
        if k < 0:
            return self.mul(-k, self.negate(point))
        result: Point = INFINITY
        addend = point
        while k:
            if k & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"EllipticCurveFp(p={self.p}, a={self.a}, b={self.b})"


def divisor_class_sum(curve: EllipticCurveFp, points: Sequence[Point]) -> Point:
    """Group-law sum of the points of an effective divisor: with the point at
    infinity as origin, two effective divisors of the same degree are
    linearly equivalent exactly when their sums agree."""
    total: Point = INFINITY
    for point in points:
        total = curve.add(total, point)
    return total


def single_point_member(curve: EllipticCurveFp, points: Sequence[Point]
                        ) -> Optional[Point]:
    """A point P with d*P linearly equivalent to the given degree-d effective
    divisor, found by exhaustive search of E(F_p) in enumeration order, or
    None when no F_p-rational witness exists."""
    if not points:
        raise ValueError("the divisor must have positive degree")
    for point in points:
        if not curve.is_on_curve(point):
            raise ValueError(f"{point} is not a point of the curve")
    d = len(points)
    target = divisor_class_sum(curve, points)
    for candidate in curve.points:
        if curve.mul(d, candidate) == target:
            return candidate
    return None


def random_divisor(curve: EllipticCurveFp, degree: int,
                   rng: random.Random) -> list[Point]:
    """A random effective divisor: degree-many uniform points of E(F_p),
    with repetition."""
    if degree < 1:
        raise ValueError("degree must be positive")
    return [rng.choice(curve.points) for _ in range(degree)]
