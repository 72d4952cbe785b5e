"""Exact arithmetic foundation: sparse bivariate Laurent polynomials,
quadratic-field elements, and dense polynomial matrices.

All values are immutable after construction and all operations are pure,
so instances may be shared freely between threads.  Coefficients are
arbitrary-precision integers; rationals only ever appear inside QuadElem.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

__all__ = [
    "LaurentPoly",
    "QuadElem",
    "PolyMatrix",
    "NonExactDivision",
    "NonInvertiblePoint",
    "ZERO",
    "ONE",
    "X",
    "Y",
]


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class NonInvertiblePoint(ZeroDivisionError):
    """Raised when a negative exponent meets a non-invertible value."""


# Exponent pairs are packed into a single int, key = a*_PACK + b, so that
# multiplying monomials is one integer addition.  |a|, |b| stay far below
# _PACK/2 for every computation at desk scale.
_PACK = 1 << 32
_HALF = _PACK >> 1


def _pack(a: int, b: int) -> int:
    return a * _PACK + b


def _unpack(key: int) -> tuple[int, int]:
    b = key % _PACK
    if b >= _HALF:
        b -= _PACK
    return (key - b) // _PACK, b


def _glex(key: int) -> tuple[int, int]:
    """Graded-lexicographic sort key on the exponent pair."""
    a, b = _unpack(key)
    return (a + b, a)


class LaurentPoly:
    """Sparse Laurent polynomial in x and y with integer coefficients.

    Canonical form: no stored coefficient is zero, and two values are equal
    iff their term maps are identical.  Exponents may be negative.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        t: dict[int, int] = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    key = a * _PACK + b
                    nc = t.get(key, 0) + c
                    if nc:
                        t[key] = nc
                    else:
                        del t[key]
        self._t = t

    @classmethod
    def _raw(cls, packed: dict[int, int]) -> "LaurentPoly":
        p = object.__new__(cls)
        p._t = packed
        return p

    @classmethod
    def monomial(cls, coeff: int, a: int = 0, b: int = 0) -> "LaurentPoly":
        return cls._raw({a * _PACK + b: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        """The term map {(a, b): coeff}, term = coeff * x^a * y^b."""
        return {_unpack(k): c for k, c in self._t.items()}

    @property
    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, int):
            if other == 0:
                return not self._t
            return self._t == {0: other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._t)
        for k, c in other._t.items():
            nc = out.get(k, 0) - c
            if nc:
                out[k] = nc
            else:
                del out[k]
        return LaurentPoly._raw(out)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            if other == 1:
                return self
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(b) == 1:
            a, b = b, a
        if len(a) == 1:
            ((k0, c0),) = a.items()
            if c0 == 1 and k0 == 0:
                return LaurentPoly._raw(dict(b))
            return LaurentPoly._raw({k0 + k: c0 * c for k, c in b.items()})
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                nc = get(k, 0) + c1 * c2
                if nc:
                    out[k] = nc
                else:
                    del out[k]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            raise ValueError("negative power of a general Laurent polynomial")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def div_monomial(self, a: int, b: int) -> "LaurentPoly":
        """Divide by x^a*y^b: shift every exponent pair by (-a, -b)."""
        d = a * _PACK + b
        return LaurentPoly._raw({k - d: c for k, c in self._t.items()})

    def _min_exponents(self) -> tuple[int, int]:
        exps = [_unpack(k) for k in self._t]
        return min(a for a, _ in exps), min(b for _, b in exps)

    def exact_div(self, q: "LaurentPoly") -> "LaurentPoly":
        """Exact division in the Laurent ring.

        Raises NonExactDivision if q does not divide self; inside the
        fraction-free elimination kernel that is a bug indicator, never an
        expected outcome.
        """
        if not q._t:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._t:
            return ZERO
        if len(q._t) == 1:
            ((dk, dc),) = q._t.items()
            out: dict[int, int] = {}
            for k, c in self._t.items():
                cq, r = divmod(c, dc)
                if r:
                    raise NonExactDivision(f"{dc} does not divide coefficient {c}")
                out[k - dk] = cq
            return LaurentPoly._raw(out)
        # Long division with graded-lex leading terms.  Both operands are
        # shifted to ordinary polynomials first so the descending chain of
        # leading terms is well-founded even for non-divisible input.
        pa, pb = self._min_exponents()
        qa, qb = q._min_exponents()
        pshift = pa * _PACK + pb
        qshift = qa * _PACK + qb
        rem = {k - pshift: c for k, c in self._t.items()}
        div = {k - qshift: c for k, c in q._t.items()}
        dlead = max(div, key=_glex)
        dlc = div[dlead]
        quot: dict[int, int] = {}
        while rem:
            k = max(rem, key=_glex)
            tk = k - dlead
            ta, tb = _unpack(tk)
            if ta < 0 or tb < 0:
                raise NonExactDivision("remainder is not divisible by the leading term")
            cq, r = divmod(rem[k], dlc)
            if r:
                raise NonExactDivision("leading coefficients do not divide exactly")
            quot[tk] = cq
            for dk, dc2 in div.items():
                nk = dk + tk
                nc = rem.get(nk, 0) - cq * dc2
                if nc:
                    rem[nk] = nc
                else:
                    rem.pop(nk, None)
        shift = pshift - qshift
        return LaurentPoly._raw({k + shift: c for k, c in quot.items()})

    def eval_quad(self, xv: "QuadElem", yv: "QuadElem") -> "QuadElem":
        """Evaluate exactly in the quadratic field containing xv and yv."""
        xpow: dict[int, QuadElem] = {}
        ypow: dict[int, QuadElem] = {}
        total = None
        for k, c in self._t.items():
            a, b = _unpack(k)
            xa = xpow.get(a)
            if xa is None:
                xa = xpow[a] = xv ** a
            yb = ypow.get(b)
            if yb is None:
                yb = ypow[b] = yv ** b
            term = xa * yb * c
            total = term if total is None else total + term
        if total is None:
            return QuadElem(Fraction(0), Fraction(0), xv.r, xv.s)
        return total

    def render(self) -> str:
        """Canonical text form: graded-lex descending, `c*x^a*y^b` pieces."""
        if not self._t:
            return "0"
        parts: list[str] = []
        for k in sorted(self._t, key=_glex, reverse=True):
            a, b = _unpack(k)
            c = self._t[k]
            factors: list[str] = []
            if abs(c) != 1 or (a == 0 and b == 0):
                factors.append(str(abs(c)))
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            term = "*".join(factors)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"


ZERO = LaurentPoly.const(0)
ONE = LaurentPoly.const(1)
X = LaurentPoly.monomial(1, 1, 0)
Y = LaurentPoly.monomial(1, 0, 1)


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected a rational, got {type(v).__name__}")


class QuadElem:
    """Element a + b*alpha of a quadratic extension with alpha^2 = r*alpha + s.

    (r, s) = (0, -1) models sqrt(-1); (r, s) = (1, -1) models a primitive
    sixth root of unity.  A value with b = 0 compares equal to its rational
    part regardless of (r, s).
    """

    __slots__ = ("a", "b", "r", "s")

    def __init__(self, a, b=0, r: int = 0, s: int = -1):
        self.a = _as_fraction(a)
        self.b = _as_fraction(b)
        self.r = r
        self.s = s

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!r} is not rational")
        return self.a

    def to_int(self) -> int:
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self!r} is not an integer")
        return f.numerator

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.b == 0:
                return QuadElem(other.a, 0, self.r, self.s)
            if self.b != 0 and (other.r, other.s) != (self.r, self.s):
                raise ValueError("mixing elements of different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.r, self.s)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        r, s = (self.r, self.s) if self.b else (o.r, o.s)
        return QuadElem(self.a + o.a, self.b + o.b, r, s)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.r, self.s)

    def __sub__(self, other) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QuadElem":
        return (-self) + other

    def __mul__(self, other) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        r, s = (self.r, self.s) if self.b else (o.r, o.s)
        bd = self.b * o.b
        return QuadElem(
            self.a * o.a + bd * s,
            self.a * o.b + self.b * o.a + bd * r,
            r,
            s,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        # conjugate is (a + b*r) - b*alpha; norm = a^2 + a*b*r - b^2*s
        norm = self.a * self.a + self.a * self.b * self.r - self.b * self.b * self.s
        if norm == 0:
            raise NonInvertiblePoint(f"{self!r} has norm zero")
        return QuadElem((self.a + self.b * self.r) / norm, -self.b / norm, self.r, self.s)

    def __truediv__(self, other) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int) -> "QuadElem":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = QuadElem(1, 0, self.r, self.s)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadElem):
            if self.a != other.a or self.b != other.b:
                return False
            return self.b == 0 or (self.r, self.s) == (other.r, other.s)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.r, self.s))

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadElem({self.a})"
        return f"QuadElem({self.a} + {self.b}*alpha; alpha^2 = {self.r}*alpha + {self.s})"


PolyLike = Union[LaurentPoly, int]


class PolyMatrix:
    """Dense square matrix of LaurentPoly entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[PolyLike]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = tuple(
            tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for e in r)
            for r in rows
        )

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_entry_fn(cls, n: int, fn: Callable[[int, int], PolyLike]) -> "PolyMatrix":
        return cls([[fn(i, j) for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return PolyMatrix(
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.n)]
                for i in range(self.n)
            ]
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        cols = [[other.rows[t][j] for t in range(n)] for j in range(n)]
        out = []
        for i in range(n):
            row = self.rows[i]
            out_row = []
            for j in range(n):
                col = cols[j]
                acc = row[0] * col[0]
                for t in range(1, n):
                    acc = acc + row[t] * col[t]
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(out)

    def __repr__(self) -> str:
        return f"PolyMatrix(n={self.n})"
