from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poissonres.exactalg import (
    Polynomial,
    PolynomialSyntaxError,
    QMatrix,
    RationalFunction,
    SingularMatrixError,
    UnknownVariableError,
    diff_poly,
    format_poly,
    inverse,
    is_negative_definite,
    parse_poly,
    parse_rational,
    solve_linear,
    subst_poly,
)

from conftest import polys


def P(text, n=2):
    return parse_poly(text, n)


class TestParse:
    def test_cancellation(self):
        assert P("x1*x2 - x2*x1").is_zero()

    def test_binomial(self):
        p = P("(x1+x2)^2")
        assert p.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}

    def test_quartic_surface(self):
        p = parse_poly("x1*x2^3 + x1*x3^3 + x4^4", 4)
        assert len(p) == 3
        assert p.degree() == 4
        assert p.coeff((1, 3, 0, 0)) == 1 and p.coeff((0, 0, 0, 4)) == 1

    @pytest.mark.parametrize("text, expected", [
        ("-x1^2", "-x1^2"),
        ("2*-x1", "-2*x1"),
        ("x1 - 1/2", "x1 - 1/2"),
        ("3/6*x2*x1", "1/2*x1*x2"),
        ("x1^2^3", "x1^6"),
        ("  ( x1 )  ", "x1"),
        ("x2 + x1^2 + 1", "x1^2 + x2 + 1"),
        ("0", "0"),
        ("(x1 - x2)*(x1 + x2)", "x1^2 - x2^2"),
    ])
    def test_canonical_text(self, text, expected):
        assert format_poly(P(text)) == expected

    @pytest.mark.parametrize("text, pos", [("x1 + * x2", 5), ("(x1", 3), ("x1 $ 2", 3), ("", 0), ("x1/2", 2)])
    def test_syntax_error_position(self, text, pos):
        with pytest.raises(PolynomialSyntaxError) as info:
            P(text)
        assert info.value.pos == pos

    @pytest.mark.parametrize("text", ["x3", "y1", "x0"])
    def test_unknown_variable(self, text):
        with pytest.raises(UnknownVariableError):
            P(text)

    def test_negative_exponent(self):
        with pytest.raises(PolynomialSyntaxError, match="negative exponent"):
            P("x1^-2")

    @given(polys(3))
    def test_print_parse_roundtrip(self, p):
        assert parse_poly(str(p), 3) == p

    def test_parse_rational(self):
        assert parse_rational("-3/6") == Fraction(-1, 2)
        assert parse_rational("7") == 7
        with pytest.raises(ValueError):
            parse_rational("0.5")


class TestPolynomial:
    def test_diff_examples(self):
        assert diff_poly(P("x1^2*x2"), 1) == P("2*x1*x2")
        assert diff_poly(P("5"), 1).is_zero()
        assert diff_poly(P("x1^3 + x2^3"), 2) == P("3*x2^2")

    def test_diff_range(self):
        with pytest.raises(IndexError):
            diff_poly(P("x1"), 3)

    def test_subst_examples(self):
        z = [P("x1"), P("x1*x2")]
        assert subst_poly(P("x2"), z) == P("x1*x2")
        assert subst_poly(P("x1*x2"), z) == P("x1^2*x2")
        p = P("x1^2 - 3*x2 + 1/2")
        assert subst_poly(p, [P("x1"), P("x2")]) == p

    def test_subst_arity(self):
        with pytest.raises(ValueError):
            subst_poly(P("x1"), [P("x1")])

    def test_mismatched_rings(self):
        with pytest.raises(ValueError):
            P("x1") + parse_poly("x1", 3)

    def test_no_float(self):
        with pytest.raises(TypeError):
            Polynomial(1, {(1,): 0.5})

    def test_shift(self):
        p = P("x1^2*x2 + x1^3")
        assert p.shift(1, -2) == P("x2 + x1")
        with pytest.raises(ValueError):
            p.shift(2, -1)

    @given(polys(2), polys(2), polys(2))
    @settings(max_examples=60)
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a and a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert a - a == Polynomial.zero(2)

    @given(polys(3), polys(3), st.integers(1, 3))
    @settings(max_examples=60)
    def test_leibniz(self, p, q, i):
        assert diff_poly(p * q, i) == diff_poly(p, i) * q + p * diff_poly(q, i)

    @given(polys(2), polys(2), st.lists(polys(3, 2, 3), min_size=2, max_size=2))
    @settings(max_examples=40)
    def test_subst_homomorphism(self, p, q, images):
        assert subst_poly(p + q, images) == subst_poly(p, images) + subst_poly(q, images)
        assert subst_poly(p * q, images) == subst_poly(p, images) * subst_poly(q, images)

    @given(polys(2), st.lists(st.fractions(max_denominator=4, min_value=-3, max_value=3), min_size=2, max_size=2))
    @settings(max_examples=40)
    def test_evaluate_matches_subst(self, p, pt):
        consts = [Polynomial.constant(1, v) for v in pt]
        assert subst_poly(p, consts).constant_term() == p.evaluate(pt)


class TestRationalFunction:
    def test_cancellation(self):
        r = RationalFunction(P("x1^2 - x2^2"), P("2*x1 + 2*x2"))
        assert r.is_polynomial()
        assert r.num == P("1/2*x1 - 1/2*x2")

    def test_canonical_equality(self):
        a = RationalFunction(P("x1"), P("x1*x2 + x1"))
        b = RationalFunction(P("-3"), P("-3*x2 - 3"))
        assert a == b

    def test_quotient_rule(self):
        r = RationalFunction(P("1"), P("x1"))
        assert r.diff(1) == RationalFunction(P("-1"), P("x1^2"))

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(P("1"), P("0"))


A2 = QMatrix([[-2, 1], [1, -2]])


class TestLinalg:
    def test_solve_examples(self):
        assert solve_linear(QMatrix([[-2]]), [-1]) == [Fraction(1, 2)]
        v = [Fraction(3, 7), -2, 5]
        assert solve_linear(QMatrix.identity(3), v) == v
        assert solve_linear(A2, [-1, 0]) == [Fraction(2, 3), Fraction(1, 3)]

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            solve_linear(QMatrix([[1, 2], [2, 4]]), [1, 1])

    def test_definiteness_examples(self):
        assert is_negative_definite(A2)
        assert is_negative_definite(QMatrix([[-1]]))
        assert not is_negative_definite(QMatrix([[-2, 2], [2, -2]]))

    def test_non_symmetric(self):
        with pytest.raises(ValueError):
            is_negative_definite(QMatrix([[-2, 1], [0, -2]]))

    @given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3),
           st.lists(st.integers(-5, 5), min_size=3, max_size=3))
    def test_solve_resubstitution(self, rows, v):
        m = QMatrix(rows)
        try:
            a = solve_linear(m, v)
        except SingularMatrixError:
            return
        assert m @ a == [Fraction(x) for x in v]
        assert inverse(m) @ m == QMatrix.identity(3)

    @given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
    @settings(max_examples=150)
    def test_definite_implies_negative_quadratic_form(self, e):
        m = QMatrix([[e[0], e[1], e[2]], [e[1], e[3], e[4]], [e[2], e[4], e[5]]])
        if not is_negative_definite(m):
            return
        lattice = [(a, b, c) for a in range(-2, 3) for b in range(-2, 3) for c in range(-2, 3)
                   if (a, b, c) != (0, 0, 0)]
        for x in lattice:
            mx = m @ list(x)
            assert sum(Fraction(xi) * yi for xi, yi in zip(x, mx)) < 0
