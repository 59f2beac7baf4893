import sys
import unittest
from fractions import Fraction
from pathlib import Path

root = str(Path(__file__).resolve().parents[1])
sys.path.append(root)

from src.exactalg import LEX, GREVLEX, MonomialOrder, Poly, format_expr, parse_expr, fresh_variable
from src.exception import NotDivisible, ParseError, SignatureMismatch


XY = ("x", "y")


def P(text, ring=XY):
    return Poly.parse(text, ring)


class TestPolyArithmetic(unittest.TestCase):

    def test_zero_coefficients_are_dropped(self):
        p = P("x - x + y")
        self.assertEqual(len(p), 1)
        self.assertEqual(p, P("y"))

    def test_binomial_square(self):
        self.assertEqual(P("(x + y)^2"), P("x^2 + 2*x*y + y^2"))
        self.assertEqual(P("(x + y)^2").to_str(), "x^2 + 2*x*y + y^2")

    def test_rational_coefficients(self):
        p = P("3/2*x^2*y - 1")
        self.assertEqual(p.terms[(2, 1)], Fraction(3, 2))
        self.assertEqual(p.to_str(), "3/2*x^2*y - 1")

    def test_int_coercion(self):
        x = Poly.variable(XY, "x")
        self.assertEqual(1 - x, P("-x + 1"))
        self.assertEqual(2 * x, P("2*x"))
        self.assertTrue((x - x) == 0)

    def test_ring_mismatch(self):
        x = Poly.variable(("x",), "x")
        y = Poly.variable(("y",), "y")
        with self.assertRaises(SignatureMismatch):
            _ = x + y

    def test_divide_exact(self):
        self.assertEqual(P("x^2 - y^2").divide_exact(P("x - y")), P("x + y"))
        with self.assertRaises(NotDivisible):
            P("x^2 + 1").divide_exact(P("x"))

    def test_degrees_and_support(self):
        p = P("x^3*y + y^2")
        self.assertEqual(p.total_degree, 4)
        self.assertEqual(p.degree_in("y"), 2)
        self.assertEqual(p.support(), ("x", "y"))
        self.assertEqual(P("y").support(), ("y",))
        self.assertEqual(Poly.zero(XY).total_degree, -1)


class TestPolyRingChanges(unittest.TestCase):

    def test_substitute_cusp_parametrization(self):
        t = Poly.variable(("t",), "t")
        relation = Poly.parse("a^3 - b^2", ("a", "b"))
        self.assertTrue(relation.substitute([t ** 2, t ** 3]).is_zero)

    def test_in_ring_reorders_by_name(self):
        p = P("x^2*y")
        moved = p.in_ring(("y", "z", "x"))
        self.assertEqual(moved, Poly.parse("x^2*y", ("y", "z", "x")))

    def test_in_ring_rejects_missing_variable(self):
        with self.assertRaises(SignatureMismatch):
            P("y").in_ring(("x",))
        self.assertEqual(P("x").in_ring(("x",)), Poly.variable(("x",), "x"))

    def test_rename(self):
        self.assertEqual(P("x*y").rename({"y": "w"}), Poly.parse("x*w", ("x", "w")))

    def test_fresh_variable(self):
        self.assertEqual(fresh_variable("t", ("x", "y")), "t")
        self.assertEqual(fresh_variable("t", ("t", "t1")), "t2")


class TestPolyPrinting(unittest.TestCase):

    def test_order_dependent_printing(self):
        p = P("x + y^2")
        self.assertEqual(p.to_str(LEX), "x + y^2")
        self.assertEqual(p.to_str(GREVLEX), "y^2 + x")

    def test_leading_terms(self):
        p = P("x*y^2 + x^2 + y^3")
        self.assertEqual(p.leading_monomial(LEX), (2, 0))
        self.assertEqual(p.leading_monomial(GREVLEX), (1, 2))

    def test_negative_leading_term(self):
        self.assertEqual(P("1 - x").to_str(), "-x + 1")
        self.assertEqual(P("-1/3*y").to_str(), "-1/3*y")

    def test_printing_is_deterministic(self):
        p = P("5*y^3 - x*y + 7 - x^2*y")
        self.assertEqual(p.to_str(), p.to_str())
        self.assertEqual(P(p.to_str()), p)

    def test_elimination_order_prefers_first_block(self):
        order = MonomialOrder.elimination(1)
        p = Poly.parse("t + x^5", ("t", "x"))
        self.assertEqual(p.leading_monomial(order), (1, 0))
        self.assertEqual(str(order), "elim(1)")


class TestExpressionGrammar(unittest.TestCase):

    def test_expression_round_trip(self):
        for text in ["(x + 1)^2*y - 3", "-x + y", "3/2*x^2*y - 1", "x*(y - 2)"]:
            self.assertEqual(format_expr(parse_expr(text)), text)

    def test_comments_and_whitespace(self):
        self.assertEqual(P("x   +  y # trailing"), P("x + y"))

    def test_parse_error_has_location(self):
        with self.assertRaises(ParseError) as ctx:
            parse_expr("x + ")
        self.assertEqual(ctx.exception.line, 1)
        with self.assertRaises(ParseError):
            parse_expr("x $ y")

    def test_division_only_by_constants(self):
        with self.assertRaises(NotDivisible):
            P("x/y")
        with self.assertRaises(NotDivisible):
            P("x/0")

    def test_unknown_variable(self):
        with self.assertRaises(SignatureMismatch):
            P("z")


if __name__ == "__main__":
    unittest.main()
