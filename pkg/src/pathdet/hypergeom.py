"""Exact evaluation of terminating hypergeometric series over the rationals.

A series is admissible when at least one upper parameter is a nonpositive
integer (forcing termination) and no lower parameter hits zero within the
summation range.  Parameter collisions are detected up front by scanning
the termination range, not by catching division errors mid-sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "LowerParamZeroDivision",
    "HyperSeries",
    "pochhammer",
    "eval_terminating",
    "check_chu_vandermonde",
    "check_lemma10",
]


class LowerParamZeroDivision(ZeroDivisionError):
    """A lower Pochhammer factor vanishes inside the summation range."""


def pochhammer(a: Fraction | int, m: int) -> Fraction:
    """Rising factorial a(a+1)...(a+m-1); equals 1 when m = 0."""
    if m < 0:
        raise ValueError("need m >= 0")
    a = Fraction(a)
    result = Fraction(1)
    for i in range(m):
        result *= a + i
    return result


def _nonpositive_int(v: Fraction) -> bool:
    return v.denominator == 1 and v <= 0


@dataclass(frozen=True)
class HyperSeries:
    """Terminating series sum_l (prod (a_i)_l / (l! prod (b_j)_l)) z^l."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction

    @classmethod
    def of(
        cls,
        upper: Iterable[Fraction | int],
        lower: Iterable[Fraction | int],
        argument: Fraction | int,
    ) -> "HyperSeries":
        h = cls(
            tuple(Fraction(a) for a in upper),
            tuple(Fraction(b) for b in lower),
            Fraction(argument),
        )
        h.termination_index()  # validates
        return h

    def termination_index(self) -> int:
        """Summation stops after this index (inclusive)."""
        stops = [-int(a) for a in self.upper if _nonpositive_int(a)]
        if not stops:
            raise ValueError("no nonpositive-integer upper parameter; series does not terminate")
        stop = min(stops)
        for b in self.lower:
            # (b)_l appears in the denominator of term l; it vanishes once
            # l >= 1 - b, which must not happen for any summed l <= stop.
            if _nonpositive_int(b) and 1 - int(b) <= stop:
                raise LowerParamZeroDivision(
                    f"lower parameter {b} vanishes at term {1 - int(b)} <= {stop}"
                )
        return stop


def eval_terminating(h: HyperSeries) -> Fraction:
    """Exact finite sum of the series up to its termination index."""
    stop = h.termination_index()
    total = Fraction(0)
    term = Fraction(1)
    for l in range(stop + 1):
        total += term
        if l == stop:
            break
        ratio = Fraction(1, l + 1) * h.argument
        for a in h.upper:
            ratio *= a + l
        for b in h.lower:
            ratio /= b + l
        term *= ratio
    return total


def check_chu_vandermonde(a: Fraction | int, count: int, c: Fraction | int) -> bool:
    """2F1[a, -N; c; 1] = (c-a)_N / (c)_N for nonnegative integer N."""
    if count < 0:
        raise ValueError("need count >= 0")
    a = Fraction(a)
    c = Fraction(c)
    lhs = eval_terminating(HyperSeries.of((a, -count), (c,), 1))
    rhs = pochhammer(c - a, count) / pochhammer(c, count)
    return lhs == rhs


def check_lemma10(n: int, a: Fraction | int, b: Fraction | int) -> bool:
    """Quadratic-argument 4F3 summation used by the last-row identity.

    4F3[-n/2, 1/2-n/2, -A, A+B; 1-n, B/2, 1/2+B/2; 1]
        = (A+B)_n / (B)_n + (-A)_n / (B)_n  for positive integer n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    a = Fraction(a)
    b = Fraction(b)
    series = HyperSeries.of(
        (Fraction(-n, 2), Fraction(1 - n, 2), -a, a + b),
        (Fraction(1 - n), b / 2, Fraction(1, 2) + b / 2),
        1,
    )
    lhs = eval_terminating(series)
    denom = pochhammer(b, n)
    rhs = (pochhammer(a + b, n) + pochhammer(-a, n)) / denom
    return lhs == rhs
