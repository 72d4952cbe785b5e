"""Hankel matrix construction and exact determinant kernels.

det_bareiss is the workhorse: fraction-free elimination whose divisions are
provably exact over an integral domain, usable both for LaurentPoly and for
plain integer matrices.  det_cofactor is the independent Laplace-expansion
oracle, feasible up to dimension ~8.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .ring import LaurentPoly, NonExactDivision, PolyMatrix, ZERO

__all__ = [
    "HankelSpec",
    "DimensionTooLarge",
    "build_hankel",
    "det_bareiss",
    "det_bareiss_int",
    "det_cofactor",
    "hankel_transform",
]


class DimensionTooLarge(ValueError):
    """Matrix dimension exceeds a configured kernel bound."""


@dataclass(frozen=True)
class HankelSpec:
    """n x n matrix with entry (i, j) = entry_source(i + j + shift)."""

    n: int
    shift: int
    entry_source: Callable[[int], LaurentPoly]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Hankel dimension must be positive")
        if self.shift not in (0, 1):
            raise ValueError("shift must be 0 or 1")


def build_hankel(spec: HankelSpec) -> PolyMatrix:
    cache = [spec.entry_source(m + spec.shift) for m in range(2 * spec.n - 1)]
    return PolyMatrix([[cache[i + j] for j in range(spec.n)] for i in range(spec.n)])


def _bareiss(rows: list[list], zero, exq):
    """Generic fraction-free elimination; `exq` is the ring's exact division."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for t in range(n - 1):
        if not m[t][t]:
            for i in range(t + 1, n):
                if m[i][t]:
                    m[t], m[i] = m[i], m[t]
                    sign = -sign
                    break
            else:
                return zero
        piv = m[t][t]
        row_t = m[t]
        for i in range(t + 1, n):
            row_i = m[i]
            mit = row_i[t]
            for j in range(t + 1, n):
                elt = piv * row_i[j] - mit * row_t[j]
                if prev is not None:
                    elt = exq(elt, prev)
                row_i[j] = elt
            row_i[t] = zero
        prev = piv
    return m[n - 1][n - 1] * sign


def det_bareiss(matrix: PolyMatrix) -> LaurentPoly:
    """Exact determinant over the Laurent ring.

    Zero pivots trigger a row search below with sign tracking; an exhausted
    column short-circuits to 0.  A NonExactDivision escaping from here means
    the kernel invariant was violated (never expected).
    """
    return _bareiss(
        [list(r) for r in matrix.rows],
        ZERO,
        lambda p, q: p.exact_div(q),
    )


def _int_exq(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise NonExactDivision(f"{b} does not divide {a}")
    return q


def det_bareiss_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix via the same elimination."""
    return _bareiss([list(r) for r in rows], 0, _int_exq)


def det_cofactor(matrix: PolyMatrix, max_dim: int = 8) -> LaurentPoly:
    """First-row Laplace expansion; the independent oracle for det_bareiss."""
    if matrix.n > max_dim:
        raise DimensionTooLarge(f"cofactor expansion capped at {max_dim}, got {matrix.n}")

    def expand(rows: tuple) -> LaurentPoly:
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = ZERO
        first = rows[0]
        for j in range(n):
            if not first[j]:
                continue
            minor = tuple(r[:j] + r[j + 1 :] for r in rows[1:])
            term = first[j] * expand(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return expand(matrix.rows)


def hankel_transform(source: Callable[[int], int], count: int, shift: int = 0) -> list[int]:
    """Determinants of the 1x1 .. count x count Hankel matrices of a sequence."""
    if count < 1:
        raise ValueError("count must be positive")
    values = [source(m + shift) for m in range(2 * count - 1)]
    out = []
    for n in range(1, count + 1):
        rows = [[values[i + j] for j in range(n)] for i in range(n)]
        out.append(det_bareiss_int(rows))
    return out
