"""Generating functions for three-step lattice paths.

A path takes steps (1,1), (1,0), (1,-1) with weights 1, x+y, x*y.  The
value of a path set is the sum over paths of the product of step weights,
collected as a LaurentPoly.  Restricted paths never go below the x-axis.

Three independent routes compute the same values: explicit binomial sums,
a reflection-principle subtraction, and a transfer-matrix recursion over
heights (the oracle used by the test suite).
"""
from __future__ import annotations

import enum
import threading
from functools import lru_cache
from math import comb, factorial

from .ring import LaurentPoly, QuadElem, _pack

__all__ = [
    "NegativeHeight",
    "Point",
    "gf_unrestricted",
    "gf_restricted",
    "gf_dp",
    "gf_restricted_reflection",
    "prefix_gf",
    "spec_point_values",
    "spec_prefix_int",
    "spec_endpoint_int",
]


class NegativeHeight(ValueError):
    """Start or end height below the x-axis for a restricted path query."""


class Point(enum.Enum):
    """Exact (x, y) specialization points turning weights into counts."""

    I = "i"
    OMEGA = "omega"
    ONE = "one"
    MINUS_ONE = "minus_one"


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when the lower index is negative or exceeds the upper."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def trinom(n: int, k1: int, k2: int) -> int:
    """n! / (k1! k2! (n-k1-k2)!), zero outside the simplex."""
    if k1 < 0 or k2 < 0 or k1 + k2 > n:
        return 0
    return comb(n, k1) * comb(n - k1, k2)


def _sum_band(terms: list[tuple[int, int, int]]) -> LaurentPoly:
    """Expand sum of coeff * (x+y)^m * (xy)^s into a LaurentPoly."""
    out: dict[int, int] = {}
    for coeff, m, s in terms:
        if not coeff:
            continue
        base = _pack(s, m + s)  # x^s * y^(m+s), the t=0 term below
        step = _pack(1, -1)  # multiply by x/y
        for t in range(m + 1):
            key = base + t * step
            c = coeff * comb(m, t)
            nc = out.get(key, 0) + c
            if nc:
                out[key] = nc
            else:
                del out[key]
    return LaurentPoly._raw(out)


def gf_unrestricted(n: int, k: int, l: int) -> LaurentPoly:
    """Weight sum over all n-step paths from height k to height l.

    Heights may be any integers; the result is 0 whenever |l - k| > n.
    """
    if n < 0:
        raise ValueError("step count must be nonnegative")
    terms = []
    for s in range(n + 1):
        up = s + l - k
        level = n - l + k - 2 * s
        if up < 0 or level < 0:
            continue
        coeff = factorial(n) // (factorial(s) * factorial(up) * factorial(level))
        terms.append((coeff, level, s))
    return _sum_band(terms)


def gf_restricted(n: int, k: int, l: int) -> LaurentPoly:
    """Weight sum over n-step paths from k to l that never go below the x-axis."""
    if k < 0 or l < 0:
        raise NegativeHeight(f"restricted path heights must be nonnegative, got k={k}, l={l}")
    if n < 0:
        raise ValueError("step count must be nonnegative")
    terms = []
    for s in range(n + 1):
        d = l - k + 2 * s
        coeff = binom(n, d) * (binom(d, s) - binom(d, s - k - 1))
        level = n - l + k - 2 * s
        if coeff and level >= 0:
            terms.append((coeff, level, s))
    return _sum_band(terms)


# Transfer-matrix oracle.  Layers (height -> polynomial after t steps) are
# memoized per start height; concurrent extension is guarded by a lock and
# returns identical values either way.
_dp_lock = threading.Lock()
_dp_layers: dict[tuple[int, bool], list[dict[int, LaurentPoly]]] = {}

_LEVEL = LaurentPoly({(1, 0): 1, (0, 1): 1})
_DOWN = LaurentPoly({(1, 1): 1})


def _dp_layer(k: int, restricted: bool, n: int) -> dict[int, LaurentPoly]:
    key = (k, restricted)
    with _dp_lock:
        layers = _dp_layers.setdefault(key, [{k: LaurentPoly.const(1)}])
        while len(layers) <= n:
            prev = layers[-1]
            cur: dict[int, LaurentPoly] = {}
            for h, p in prev.items():
                for dh, w in ((1, None), (0, _LEVEL), (-1, _DOWN)):
                    nh = h + dh
                    if restricted and nh < 0:
                        continue
                    v = p if w is None else p * w
                    if nh in cur:
                        cur[nh] = cur[nh] + v
                    else:
                        cur[nh] = v
            layers.append(cur)
        return layers[n]


def gf_dp(n: int, k: int, l: int, restricted: bool = True) -> LaurentPoly:
    """Transfer-matrix route to the same value as the closed forms."""
    if restricted and (k < 0 or l < 0):
        raise NegativeHeight(f"restricted path heights must be nonnegative, got k={k}, l={l}")
    if n < 0:
        raise ValueError("step count must be nonnegative")
    layer = _dp_layer(k, restricted, n)
    return layer.get(l, LaurentPoly.const(0))


def gf_restricted_reflection(n: int, k: int, l: int) -> LaurentPoly:
    """Reflection-principle route: unrestricted minus (xy)^(k+1)-weighted mirror."""
    if k < 0 or l < 0:
        raise NegativeHeight(f"restricted path heights must be nonnegative, got k={k}, l={l}")
    mirror = gf_unrestricted(n, -k - 2, l) * LaurentPoly.monomial(1, k + 1, k + 1)
    return gf_unrestricted(n, k, l) - mirror


@lru_cache(maxsize=None)
def prefix_gf(n: int, k: int) -> LaurentPoly:
    """Weight sum over n-step restricted paths from height k with any endpoint."""
    if k < 0:
        raise NegativeHeight(f"start height must be nonnegative, got k={k}")
    total = LaurentPoly.const(0)
    for l in range(k + n + 1):
        total = total + gf_restricted(n, k, l)
    return total


def spec_point_values(point: Point) -> tuple[QuadElem, QuadElem]:
    """Exact coordinates of a specialization point.

    I: (alpha, -alpha) with alpha^2 = -1.  OMEGA: (omega, omega^-1) with
    omega^2 = omega - 1.  ONE and MINUS_ONE are rational.
    """
    if point is Point.I:
        a = QuadElem(0, 1, 0, -1)
        return a, -a
    if point is Point.OMEGA:
        w = QuadElem(0, 1, 1, -1)
        return w, QuadElem(1, -1, 1, -1)  # omega^-1 = 1 - omega
    if point is Point.ONE:
        return QuadElem(1), QuadElem(1)
    if point is Point.MINUS_ONE:
        return QuadElem(-1), QuadElem(-1)
    raise ValueError(f"unknown point {point!r}")


def spec_prefix_int(point: Point, n: int, k: int) -> int:
    """Integer value of prefix_gf(n, k) at a specialization point, via closed forms."""
    if k < 0:
        raise NegativeHeight(f"start height must be nonnegative, got k={k}")
    if point is Point.I:
        base = (n + 1 - k) // 2
        return sum(binom(n, base + l) for l in range(k + 1))
    if point is Point.OMEGA:
        return sum(
            trinom(n, e, e + l)
            for e in range(n + 1)
            for l in range(-k, k + 2)
        )
    if point is Point.ONE:
        return sum(binom(2 * n, n + l) for l in range(-k, k + 2))
    if point is Point.MINUS_ONE:
        if n == 0:
            return 1
        value, rem = divmod((k + 1) * binom(2 * n, n + k + 1), n)
        if rem:
            raise ArithmeticError("band sum is not integral; closed form misapplied")
        return -value if (n + k) % 2 else value
    raise ValueError(f"unknown point {point!r}")


def spec_endpoint_int(point: Point, n: int, k: int, l: int, restricted: bool) -> int:
    """Integer value of a single-endpoint generating function at a point."""
    if restricted and (k < 0 or l < 0):
        raise NegativeHeight(f"restricted path heights must be nonnegative, got k={k}, l={l}")
    if point is Point.I:
        if (n + k + l) % 2:
            return 0
        main = binom(n, (n + l - k) // 2)
        if not restricted:
            return main
        return main - binom(n, (n + l + k + 2) // 2)
    if point is Point.OMEGA:
        main = sum(trinom(n, e, e + l - k) for e in range(n + 1))
        if not restricted:
            return main
        return main - sum(trinom(n, e, e + l + k + 2) for e in range(n + 1))
    if point in (Point.ONE, Point.MINUS_ONE):
        main = binom(2 * n, n + l - k)
        value = main if not restricted else main - binom(2 * n, n + l + k + 2)
        if point is Point.MINUS_ONE and (n + k + l) % 2:
            return -value
        return value
    raise ValueError(f"unknown point {point!r}")
