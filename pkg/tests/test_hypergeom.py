import random
from fractions import Fraction

import pytest

from pathdet.hypergeom import (
    HyperSeries,
    LowerParamZeroDivision,
    check_chu_vandermonde,
    check_lemma10,
    eval_terminating,
    pochhammer,
)


def test_pochhammer_examples():
    assert pochhammer(Fraction(5, 7), 0) == 1
    assert pochhammer(1, 5) == 120
    assert pochhammer(-3, 4) == 0
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)


def test_empty_beyond_first_term():
    h = HyperSeries.of((0, Fraction(3, 2)), (Fraction(7, 2),), 1)
    assert eval_terminating(h) == 1


def test_gauss_sum_instance():
    h = HyperSeries.of((2, -3), (5,), 1)
    assert eval_terminating(h) == Fraction(2, 7)


def test_quadratic_argument_sum_instance():
    # n=2, A=1, B=3: both sides equal 5/3
    h = HyperSeries.of((-1, Fraction(-1, 2), -1, 4), (-1, Fraction(3, 2), 2), 1)
    assert eval_terminating(h) == Fraction(5, 3)
    assert check_lemma10(2, 1, 3)


def test_termination_index():
    h = HyperSeries.of((-4, Fraction(1, 3)), (Fraction(9, 2),), 1)
    assert h.termination_index() == 4
    h = HyperSeries.of((-4, -2), (Fraction(9, 2),), 1)
    assert h.termination_index() == 2
    # reference: direct sum with exactly stop+1 summands
    direct = sum(
        pochhammer(-4, l) * pochhammer(-2, l) / (pochhammer(1, l) * pochhammer(Fraction(9, 2), l))
        for l in range(3)
    )
    assert eval_terminating(h) == direct


def test_validation_errors():
    with pytest.raises(ValueError):
        HyperSeries.of((Fraction(1, 2),), (3,), 1)  # never terminates
    with pytest.raises(LowerParamZeroDivision):
        HyperSeries.of((-5, 2), (-3,), 1)  # (-3)_4 = 0 within range
    # a lower parameter that would vanish only beyond termination is fine
    HyperSeries.of((-2, 2), (-3,), 1)


def test_chu_vandermonde_examples():
    assert check_chu_vandermonde(2, 3, 5)
    for a in (Fraction(1, 3), 4, Fraction(-7, 2)):
        assert check_chu_vandermonde(a, 0, Fraction(5, 3))


def test_chu_vandermonde_randomized():
    rng = random.Random(123)
    checked = 0
    while checked < 200:
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        c = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        count = rng.randint(0, 12)
        if c.denominator == 1 and c <= 0 and 1 - int(c) <= count:
            continue
        assert check_chu_vandermonde(a, count, c), (a, count, c)
        checked += 1


def test_quadratic_argument_sum_randomized():
    rng = random.Random(321)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 10)
        a = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
        b = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
        try:
            ok = check_lemma10(n, a, b)
        except (ZeroDivisionError, ValueError):
            continue
        assert ok, (n, a, b)
        checked += 1


def _contiguous_sides(n, t, k, l):
    """Both sides of the 5F4 -> 4F3 contiguous relation at the proof's parameters."""
    a = Fraction(-t)
    b = Fraction(-l + k - t)
    b1 = Fraction(n * t, l - k - n)
    c = 1 + b1
    a1 = Fraction(-n, 2)
    a2 = Fraction(1 - n, 2)
    lower = (b1, Fraction(1 - n), Fraction(1 - l + k, 2) - t, Fraction(2 - l + k, 2) - t)
    lhs = eval_terminating(HyperSeries.of((a, b, c, a1, a2), lower, 1))
    first = eval_terminating(HyperSeries.of((a, b + 1, c - 1, a1, a2), lower, 1))
    second = eval_terminating(HyperSeries.of((a + 1, b, c - 1, a1, a2), lower, 1))
    rhs = (b * (c - a - 1) / ((b - a) * (c - 1))) * first + (
        a * (c - b - 1) / ((a - b) * (c - 1))
    ) * second
    return lhs, rhs


def test_contiguous_relation_randomized():
    rng = random.Random(555)
    checked = 0
    while checked < 50:
        n = rng.randint(2, 10)
        t = rng.randint(1, 4)
        k = rng.randint(0, 4)
        l = rng.randint(0, 8)
        if l == k or l - k - n == 0:  # b - a = k - l and the B1 denominator must not vanish
            continue
        try:
            lhs, rhs = _contiguous_sides(n, t, k, l)
        except (ZeroDivisionError, ValueError):
            continue
        assert lhs == rhs, (n, t, k, l)
        checked += 1
