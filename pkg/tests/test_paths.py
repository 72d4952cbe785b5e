import itertools

import pytest

from pathdet.paths import (
    NegativeHeight,
    Point,
    gf_dp,
    gf_restricted,
    gf_restricted_reflection,
    gf_unrestricted,
    prefix_gf,
    spec_endpoint_int,
    spec_point_values,
    spec_prefix_int,
)
from pathdet.ring import ONE, X, Y, LaurentPoly, ZERO

XY = X * Y
LEVEL = X + Y


def brute_force(n, k, l, restricted):
    """Sum step-word weights over all 3^n words; the ground-truth oracle."""
    total = ZERO
    for word in itertools.product((1, 0, -1), repeat=n):
        h = k
        weight = ONE
        ok = True
        for step in word:
            if step == 0:
                weight = weight * LEVEL
            elif step == -1:
                weight = weight * XY
            h += step
            if restricted and h < 0:
                ok = False
                break
        if ok and h == l:
            total = total + weight
    return total


def test_unrestricted_examples():
    assert gf_unrestricted(0, 0, 0) == ONE
    assert gf_unrestricted(2, 0, 0) == LEVEL ** 2 + 2 * XY
    assert gf_unrestricted(3, 0, 5) == ZERO


def test_restricted_examples():
    assert gf_restricted(2, 0, 0) == LEVEL ** 2 + XY
    assert gf_restricted(3, 1, 4) == ONE  # all-up path
    assert gf_restricted(2, 0, 1) == 2 * LEVEL


def test_dp_examples():
    assert gf_dp(2, 0, 0, True) == gf_restricted(2, 0, 0)
    assert gf_dp(1, 0, 1, True) == ONE
    assert gf_dp(1, 0, -1, False) == XY


def test_reflection_examples():
    assert gf_restricted_reflection(2, 0, 0) == gf_restricted(2, 0, 0)
    for k in range(4):
        assert gf_restricted_reflection(0, k, k) == ONE
    assert gf_restricted_reflection(1, 0, 0) == LEVEL


def test_negative_height_rejected():
    with pytest.raises(NegativeHeight):
        gf_restricted(2, -1, 0)
    with pytest.raises(NegativeHeight):
        gf_dp(2, 0, -1, True)
    with pytest.raises(NegativeHeight):
        prefix_gf(3, -2)


def test_dp_matches_brute_force_enumeration():
    for n in range(7):
        for k in range(3):
            for l in range(4):
                assert gf_dp(n, k, l, True) == brute_force(n, k, l, True)
        for k in (-1, 0, 2):
            for l in (-2, 0, 1):
                assert gf_dp(n, k, l, False) == brute_force(n, k, l, False)


def test_three_route_agreement():
    for n in range(8):
        for k in range(n + 1):
            for l in range(n + 1):
                closed = gf_restricted(n, k, l)
                assert closed == gf_dp(n, k, l, True)
                assert closed == gf_restricted_reflection(n, k, l)
        for k in range(-n, n + 1):
            for l in range(-n, n + 1):
                assert gf_unrestricted(n, k, l) == gf_dp(n, k, l, False)


def test_retracing_symmetry():
    # reversing paths exchanges endpoints at the cost of (xy)^(k-l)
    for n in range(11):
        for k in range(n + 1):
            for l in range(n + 1):
                lhs = gf_restricted(n, k, l)
                rhs = gf_restricted(n, l, k)
                if k >= l:
                    assert lhs == LaurentPoly.monomial(1, k - l, k - l) * rhs
                else:
                    assert rhs == LaurentPoly.monomial(1, l - k, l - k) * lhs


def test_prefix_examples():
    for k in range(4):
        assert prefix_gf(0, k) == ONE
    assert prefix_gf(1, 0) == 1 + LEVEL
    assert prefix_gf(2, 0) == LEVEL ** 2 + XY + 2 * LEVEL + 1


def test_point_coordinates():
    xv, yv = spec_point_values(Point.I)
    assert xv * xv == -1 and yv == -xv
    xv, yv = spec_point_values(Point.OMEGA)
    assert xv * xv == xv - 1
    assert xv * yv == 1
    assert spec_point_values(Point.ONE) == (1, 1)
    assert spec_point_values(Point.MINUS_ONE) == (-1, -1)


def test_prefix_specialization_examples():
    assert [spec_prefix_int(Point.OMEGA, n, 0) for n in range(6)] == [1, 2, 5, 13, 35, 96]
    for k in range(6):
        assert spec_prefix_int(Point.MINUS_ONE, 0, k) == 1
    assert spec_prefix_int(Point.I, 2, 0) == 2


def test_prefix_specializations_match_symbolic_values():
    for point in Point:
        xv, yv = spec_point_values(point)
        for n in range(11):
            for k in range(5):
                value = prefix_gf(n, k).eval_quad(xv, yv)
                assert value == spec_prefix_int(point, n, k), (point, n, k)


def test_endpoint_specializations_match_symbolic_values():
    for point in Point:
        xv, yv = spec_point_values(point)
        for n in range(11):
            for k in range(4):
                for l in range(4):
                    sym = gf_restricted(n, k, l).eval_quad(xv, yv)
                    assert sym == spec_endpoint_int(point, n, k, l, True), (point, n, k, l)
                    sym = gf_unrestricted(n, k - 2, l).eval_quad(xv, yv)
                    assert sym == spec_endpoint_int(point, n, k - 2, l, False)


def test_dp_memo_is_safe_under_concurrent_extension():
    from concurrent.futures import ThreadPoolExecutor

    # height 37 is untouched by other tests, so the workers race to build
    # its memo layers from scratch
    jobs = [(n, l) for n in range(9) for l in range(34, 40)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda q: gf_dp(q[0], 37, q[1], True), jobs))
    for (n, l), got in zip(jobs, results):
        assert got == gf_restricted(n, 37, l)


def test_catalan_and_motzkin_counts_emerge_at_points():
    # with level weight 0 and down weight 1, even-length closed paths count
    # up/down-only excursions
    catalan = [1, 1, 2, 5, 14, 42, 132]
    for n, c in enumerate(catalan):
        assert spec_endpoint_int(Point.I, 2 * n, 0, 0, True) == c
        if n:
            assert spec_endpoint_int(Point.I, 2 * n - 1, 0, 0, True) == 0
    motzkin = [1, 1, 2, 4, 9, 21, 51, 127]
    for n, m in enumerate(motzkin):
        assert spec_endpoint_int(Point.OMEGA, n, 0, 0, True) == m
