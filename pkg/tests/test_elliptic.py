import math
import random

import pytest

from okbody.elliptic import (INFINITY, EllipticCurveFp, divisor_class_sum,
                             is_prime, random_divisor, single_point_member)


@pytest.fixture(scope="module")
def e5():
    return EllipticCurveFp(5, 0, 1)


@pytest.fixture(scope="module")
def e101():
    return EllipticCurveFp(101, 0, 1)


def test_f5_curve_has_exactly_six_points(e5):
    # independent enumeration: brute force over all affine pairs
    brute = [(x, y) for x in range(5) for y in range(5)
             if (y * y - x ** 3 - 1) % 5 == 0]
    assert e5.order() == 6
    assert set(e5.points) == {INFINITY, *brute}


def test_group_order_annihilates(e5):
    for point in e5.points:
        assert e5.mul(6, point) is INFINITY


def test_identity_and_inverse(e101):
    rng = random.Random(0)
    for _ in range(50):
        point = rng.choice(e101.points)
        assert e101.add(point, INFINITY) == point
        assert e101.add(point, e101.negate(point)) is INFINITY


def test_associativity_and_commutativity(e101):
    rng = random.Random(1)
    for _ in range(300):
        p, q, r = (rng.choice(e101.points) for _ in range(3))
        assert e101.add(e101.add(p, q), r) == e101.add(p, e101.add(q, r))
        assert e101.add(p, q) == e101.add(q, p)


def test_mul_is_additive_in_the_scalar(e101):
    rng = random.Random(2)
    for _ in range(40):
        point = rng.choice(e101.points)
        m, k = rng.randrange(0, 30), rng.randrange(0, 30)
        assert e101.mul(m + k, point) == \
            e101.add(e101.mul(m, point), e101.mul(k, point))


def test_mul_against_naive_addition(e101):
    rng = random.Random(3)
    for _ in range(20):
        point = rng.choice(e101.points)
        k = rng.randrange(0, 25)
        naive = INFINITY
        for _i in range(k):
            naive = e101.add(naive, point)
        assert e101.mul(k, point) == naive


def test_hasse_bound(e5, e101):
    for curve in (e5, e101):
        assert abs(curve.order() - (curve.p + 1)) <= 2 * math.isqrt(curve.p) + 2
        assert (curve.order() - (curve.p + 1)) ** 2 <= 4 * curve.p


def test_point_membership_enforced(e101):
    with pytest.raises(ValueError):
        e101.add((1, 1), INFINITY)
    with pytest.raises(ValueError):
        e101.mul(2, (3, 5))


def test_bad_curves_rejected():
    with pytest.raises(ValueError):
        EllipticCurveFp(10, 1, 1)
    with pytest.raises(ValueError):
        EllipticCurveFp(5, 0, 0)  # discriminant zero
    assert is_prime(101) and not is_prime(1)


# -- single-point representatives -----------------------------------------------


def test_forced_witness_for_multiples(e101):
    rng = random.Random(4)
    for _ in range(20):
        q = rng.choice(e101.points)
        d = rng.randrange(1, 6)
        witness = single_point_member(e101, [q] * d)
        assert witness is not None
        assert e101.mul(d, witness) == e101.mul(d, q)


def test_degree_one_returns_the_class_itself(e5):
    for point in e5.points:
        assert single_point_member(e5, [point]) == point


def test_degree_two_witnesses_verify(e101):
    rng = random.Random(5)
    missing = 0
    for _ in range(60):
        divisor = random_divisor(e101, 2, rng)
        target = divisor_class_sum(e101, divisor)
        witness = single_point_member(e101, divisor)
        if witness is None:
            missing += 1
            assert all(e101.mul(2, p) != target for p in e101.points)
        else:
            assert e101.mul(2, witness) == target
    assert 0 < missing < 60  # division by 2 fails for about half the classes


def test_coprime_degree_always_has_witness(e101):
    # |E(F_101)| = 102 and gcd(5, 102) = 1, so division by 5 never fails
    assert math.gcd(5, e101.order()) == 1
    rng = random.Random(6)
    for _ in range(40):
        divisor = random_divisor(e101, 5, rng)
        assert single_point_member(e101, divisor) is not None


def test_infinity_class_witnessed_by_infinity(e101):
    point = e101.points[1]
    divisor = [point, e101.negate(point)]
    assert divisor_class_sum(e101, divisor) is INFINITY
    assert single_point_member(e101, divisor) is INFINITY


def test_empty_divisor_rejected(e101):
    with pytest.raises(ValueError):
        single_point_member(e101, [])


def test_divisor_point_off_curve_rejected(e101):
    with pytest.raises(ValueError):
        single_point_member(e101, [(1, 1)])
