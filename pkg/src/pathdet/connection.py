"""The determinant-preserving connection matrix and its correction matrices.

Left-multiplying the Hankel matrix of any-endpoint path sums by this
unit-determinant matrix turns it into the Hankel matrix of endpoint-0 path
sums, up to a correction concentrated in the last row.  The check_* functions
make the supporting identities executable; they return booleans and log the
offending polynomial difference on failure.

Binomial convention in this module only: C(u, v) = 0 whenever v < 0 or
u < v, including negative u with v = 0.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from math import comb

from .hankel import HankelSpec, build_hankel
from .paths import gf_restricted, gf_unrestricted, prefix_gf
from .ring import LaurentPoly, PolyMatrix, ZERO

__all__ = [
    "strict_binom",
    "connection_matrix",
    "last_row_alt",
    "correction_c0",
    "correction_c1",
    "check_lemma7",
    "check_lemma8",
    "check_lemma9",
    "check_factorization",
    "check_path_cut",
]

log = logging.getLogger(__name__)

# (1+x)(1+y) = 1 + x + y + xy
_UNIT_WEIGHT_SUM = LaurentPoly({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})


def strict_binom(u: int, v: int) -> int:
    """Binomial with the strict cutoff: 0 when v < 0 or u < v (even for u < 0, v = 0)."""
    if v < 0 or u < v:
        return 0
    return comb(u, v)


def _last_row_entry(n: int, j: int) -> LaurentPoly:
    """Entry (n-1, j), j <= n-2: double-binomial sum divided by xy, with sign."""
    acc: dict[tuple[int, int], int] = {}
    for l in range(j, n + 1):
        clj = strict_binom(l, j)
        if not clj:
            continue
        c1 = clj * strict_binom(n + j - 1 - l, j)
        if c1:
            key = (l - j, n - 1 - l)
            acc[key] = acc.get(key, 0) + c1
        c2 = clj * strict_binom(n + j - l, j)
        if c2:
            key = (l - j, n - l)
            acc[key] = acc.get(key, 0) + c2
    sign = -1 if (n + j) % 2 else 1
    return LaurentPoly({k: sign * c for k, c in acc.items()}).div_monomial(1, 1)


def _corner_entry(n: int) -> LaurentPoly:
    """Entry (n-1, n-1): (xy - (n-1)(x+y)) / (xy)."""
    return LaurentPoly({(0, 0): 1, (0, -1): -(n - 1), (-1, 0): -(n - 1)})


@lru_cache(maxsize=64)
def connection_matrix(n: int) -> PolyMatrix:
    """The n x n unit-determinant matrix linking prefix and endpoint-0 Hankel forms.

    Upper bidiagonal with (1+x)(1+y)/(xy) on the diagonal and -1/(xy) above
    it, except for the last row, whose entries carry the double-binomial sums
    and the corner value (xy - (n-1)(x+y))/(xy).
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    diag = _UNIT_WEIGHT_SUM.div_monomial(1, 1)
    above = LaurentPoly({(-1, -1): -1})
    rows = []
    for i in range(n - 1):
        row = [ZERO] * n
        row[i] = diag
        row[i + 1] = above
        rows.append(row)
    last = [_last_row_entry(n, j) for j in range(n - 1)]
    last.append(_corner_entry(n))
    if n == 1:
        rows = [[_corner_entry(1)]]
    else:
        rows.append(last)
    return PolyMatrix(rows)


def last_row_alt(n: int, j: int) -> LaurentPoly:
    """Alternative (x+y, xy)-form of the last-row entry (n-1, j), 0 <= j <= n-2."""
    if not 0 <= j <= n - 2:
        raise IndexError(f"last-row column must satisfy 0 <= j <= n-2, got j={j}, n={n}")
    total = ZERO
    for r in range(n // 2 + 1):
        c1 = strict_binom(n - r - 1, r) * strict_binom(n - 2 * r - 1, j)
        if c1:
            total = total + _lift_band((-1) ** r * c1, n - 1 - j - 2 * r, r)
        c2 = strict_binom(n - r, r) * strict_binom(n - 2 * r, j)
        if c2:
            total = total + _lift_band((-1) ** r * c2, n - j - 2 * r, r)
    sign = -1 if (n + j) % 2 else 1
    return (total * sign).div_monomial(1, 1)


def _lift_band(coeff: int, m: int, s: int) -> LaurentPoly:
    """coeff * (x+y)^m * (xy)^s as a LaurentPoly."""
    return LaurentPoly({(t + s, m - t + s): coeff * comb(m, t) for t in range(m + 1)})


def correction_c0(n: int, k: int) -> PolyMatrix:
    """Correction matrix for the shift-0 factorization: nonzero last row only."""
    return _correction(n, k, 0)


def correction_c1(n: int, k: int) -> PolyMatrix:
    """Correction matrix for the shift-1 factorization (uses one extra step)."""
    return _correction(n, k, 1)


def _correction(n: int, k: int, shift: int) -> PolyMatrix:
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    rows = [[ZERO] * n for _ in range(n)]
    xy_pow = LaurentPoly.monomial(1, n - 1, n - 1)
    for j in range(n):
        total = ZERO
        for l in range(j + shift - (n - k) + 1):
            total = total + gf_unrestricted(j + shift, 0, n - k + l)
        rows[n - 1][j] = xy_pow * total
    return PolyMatrix(rows)


def _report(name: str, diff: LaurentPoly, params: str) -> bool:
    if diff.is_zero:
        return True
    log.warning("%s failed at %s; difference = %s", name, params, diff.render())
    return False


def check_lemma7(n: int) -> bool:
    """Last-row telescoping identity, cleared of denominators.

    sum_j ((1+x)(1+y))^j * A[n-1][j] + ((1+x)(1+y))^(n-1) * corner = (xy)^(n-1).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    a = connection_matrix(n)
    total = ZERO
    power = LaurentPoly.const(1)
    for j in range(n - 1):
        total = total + power * a.entry(n - 1, j)
        power = power * _UNIT_WEIGHT_SUM
    # after the loop, power = ((1+x)(1+y))^(n-1)
    total = total + power * _corner_entry(n)
    diff = total - LaurentPoly.monomial(1, n - 1, n - 1)
    return _report("lemma7", diff, f"n={n}")


def check_lemma8(m: int, k: int) -> bool:
    """One-step prefix recursion: (1+x)(1+y)*prefix(m) - prefix(m+1) = xy*endpoint0(m)."""
    if m < 0 or k < 0:
        raise ValueError("need m >= 0 and k >= 0")
    lhs = _UNIT_WEIGHT_SUM * prefix_gf(m, k) - prefix_gf(m + 1, k)
    rhs = LaurentPoly.monomial(1, 1, 1) * gf_restricted(m, k, 0)
    return _report("lemma8", lhs - rhs, f"m={m}, k={k}")


def check_lemma9(m: int, n: int, k: int) -> bool:
    """Last-row action on prefix sums equals endpoint-0 value plus overflow term."""
    if m > n:
        raise ValueError(f"need m <= n, got m={m}, n={n}")
    if m < 0 or n < 1 or k < 0:
        raise ValueError("need m >= 0, n >= 1, k >= 0")
    a = connection_matrix(n)
    lhs = ZERO
    for j in range(n):
        lhs = lhs + a.entry(n - 1, j) * prefix_gf(m + j, k)
    overflow = ZERO
    for l in range(m - (n - k) + 1):
        overflow = overflow + gf_unrestricted(m, 0, n - k + l)
    rhs = gf_restricted(m + n - 1, k, 0) + LaurentPoly.monomial(1, n - 1, n - 1) * overflow
    return _report("lemma9", lhs - rhs, f"m={m}, n={n}, k={k}")


def check_factorization(n: int, k: int, shift: int) -> bool:
    """A(n) times the prefix Hankel matrix = endpoint-0 Hankel matrix + correction."""
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    prefix_h = build_hankel(HankelSpec(n, shift, lambda i, k=k: prefix_gf(i, k)))
    endpoint_h = build_hankel(HankelSpec(n, shift, lambda i, k=k: gf_restricted(i, k, 0)))
    corr = _correction(n, k, shift)
    lhs = connection_matrix(n) @ prefix_h
    rhs = endpoint_h + corr
    for i in range(n):
        for j in range(n):
            diff = lhs.entry(i, j) - rhs.entry(i, j)
            if not _report("factorization", diff, f"n={n}, k={k}, shift={shift}, cell=({i},{j})"):
                return False
    return True


def check_path_cut(i: int, j: int, k: int) -> bool:
    """Cutting after i steps: endpoint sums compose through the intermediate height."""
    if i < 0 or j < 0 or k < 0:
        raise ValueError("need i, j, k >= 0")
    rhs = ZERO
    for h in range(i + 1):
        rhs = rhs + gf_restricted(i, 0, h) * gf_restricted(j, h, k)
    lhs = gf_restricted(i + j, 0, k)
    return _report("path_cut", lhs - rhs, f"i={i}, j={j}, k={k}")
