import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from pathdet.ring import (
    ONE,
    X,
    Y,
    LaurentPoly,
    NonExactDivision,
    NonInvertiblePoint,
    PolyMatrix,
    QuadElem,
    ZERO,
)
from pathdet.paths import Point, spec_point_values


XY = X * Y


def poly(terms):
    return LaurentPoly(terms)


# --- addition -------------------------------------------------------------

def test_add_inverse_cancels():
    assert X + (-X) == ZERO
    assert (X + (-X)).is_zero


def test_add_disjoint_supports():
    assert (X + Y) + XY == poly({(1, 0): 1, (0, 1): 1, (1, 1): 1})


def test_add_after_square():
    assert (X + Y) ** 2 + XY == poly({(2, 0): 1, (1, 1): 3, (0, 2): 1})


# --- multiplication -------------------------------------------------------

def test_mul_identity():
    assert (X + Y) * ONE == X + Y


def test_mul_laurent_inverse_monomial():
    assert XY * LaurentPoly({(-1, -1): 1}) == ONE


def test_mul_binomial_square():
    assert (X + Y) * (X + Y) == poly({(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_scalar_and_int_coercion():
    assert 2 * X == poly({(1, 0): 2})
    assert X - 1 == poly({(1, 0): 1, (0, 0): -1})
    assert (X * 0) == 0
    assert ONE == 1


# --- monomial division ----------------------------------------------------

def test_div_monomial():
    assert XY.div_monomial(1, 1) == ONE
    assert poly({(2, 1): 1, (1, 2): 1}).div_monomial(1, 1) == X + Y
    assert ONE.div_monomial(1, 1) == poly({(-1, -1): 1})


# --- exact division -------------------------------------------------------

def test_exact_div_examples():
    assert ((X + Y) ** 2).exact_div(X + Y) == X + Y
    p = poly({(3, -2): 5, (0, 0): -7})
    assert p.exact_div(ONE) == p
    assert (X * X - Y * Y).exact_div(X - Y) == X + Y


def test_exact_div_rejects_nonmultiple():
    with pytest.raises(NonExactDivision):
        (X + 1).exact_div(Y + 1)
    with pytest.raises(NonExactDivision):
        poly({(0, 0): 3}).exact_div(poly({(0, 0): 2}))
    with pytest.raises(ZeroDivisionError):
        X.exact_div(ZERO)


# --- evaluation -----------------------------------------------------------

def test_eval_at_sqrt_minus_one_point():
    xv, yv = spec_point_values(Point.I)
    assert (X + Y).eval_quad(xv, yv) == 0
    assert XY.eval_quad(xv, yv) == 1


def test_eval_at_sixth_root_point():
    xv, yv = spec_point_values(Point.OMEGA)
    assert XY.eval_quad(xv, yv) == 1
    assert (X + Y).eval_quad(xv, yv) == 1


def test_eval_negative_exponent_needs_invertible_value():
    p = LaurentPoly({(-1, 0): 1})
    zero = QuadElem(0)
    with pytest.raises(NonInvertiblePoint):
        p.eval_quad(zero, QuadElem(1))


# --- rendering ------------------------------------------------------------

def test_render_canonical_order_and_signs():
    assert ((X + Y) ** 2 + XY).render() == "x^2 + 3*x*y + y^2"
    assert ZERO.render() == "0"
    assert ONE.render() == "1"
    assert LaurentPoly({(-1, -1): 1}).render() == "x^-1*y^-1"
    assert (X - Y).render() == "x - y"
    assert (-XY).render() == "-x*y"
    assert (Y * 2 - 3).render() == "2*y - 3"


# --- hypothesis strategies ------------------------------------------------

exponents = st.integers(min_value=-3, max_value=4)
coeffs = st.integers(min_value=-20, max_value=20)


@st.composite
def laurent_polys(draw, max_terms=5):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        terms[(draw(exponents), draw(exponents))] = draw(coeffs)
    return LaurentPoly(terms)


@st.composite
def monomial_rich(draw):
    """Nonzero polynomials, biased toward monomials like the kernel sees."""
    if draw(st.booleans()):
        c = draw(coeffs.filter(bool))
        return LaurentPoly({(draw(exponents), draw(exponents)): c})
    p = draw(laurent_polys(max_terms=4))
    return p if p else ONE


@settings(max_examples=1000)
@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=300)
@given(laurent_polys(), monomial_rich())
def test_exact_div_inverts_multiplication(p, q):
    assert (p * q).exact_div(q) == p


@settings(max_examples=200)
@given(laurent_polys(), laurent_polys(), st.sampled_from(list(Point)))
def test_eval_is_ring_homomorphism(p, q, point):
    xv, yv = spec_point_values(point)
    if point is Point.MINUS_ONE:
        xv, yv = QuadElem(Fraction(-2, 3)), QuadElem(Fraction(5, 7))
    assert (p * q).eval_quad(xv, yv) == p.eval_quad(xv, yv) * q.eval_quad(xv, yv)
    assert (p + q).eval_quad(xv, yv) == p.eval_quad(xv, yv) + q.eval_quad(xv, yv)


# --- QuadElem -------------------------------------------------------------

def test_quad_reduction_rule():
    w = QuadElem(0, 1, 1, -1)  # alpha with alpha^2 = alpha - 1
    assert w * w == QuadElem(-1, 1, 1, -1)
    assert w ** 6 == 1  # primitive sixth root
    assert w * w.inverse() == 1


def test_quad_rational_comparisons():
    assert QuadElem(Fraction(3, 2)) == Fraction(3, 2)
    assert QuadElem(2) == 2
    assert QuadElem(2, 1) != 2
    assert QuadElem(5).to_int() == 5
    with pytest.raises(ValueError):
        QuadElem(0, 1).to_int()


def test_quad_negative_powers():
    i = QuadElem(0, 1, 0, -1)
    assert i ** -1 == -i
    assert i ** -2 == -1


def test_quad_field_mixing_guard():
    i = QuadElem(0, 1, 0, -1)
    w = QuadElem(0, 1, 1, -1)
    with pytest.raises(ValueError):
        i + w
    assert i + QuadElem(3, 0, 1, -1) == QuadElem(3, 1, 0, -1)


# --- PolyMatrix -----------------------------------------------------------

def test_matrix_shape_and_equality():
    m = PolyMatrix([[ONE, X], [Y, ZERO]])
    assert m.n == 2
    assert m == PolyMatrix([[1, X], [Y, 0]])
    with pytest.raises(ValueError):
        PolyMatrix([[ONE], [X, Y]])


def test_matrix_product_against_hand_expansion():
    a = PolyMatrix([[X, ONE], [ZERO, Y]])
    b = PolyMatrix([[ONE, Y], [X, ZERO]])
    assert a @ b == PolyMatrix([[X + X * 1, X * Y], [Y * X, ZERO]])
