import sys
import unittest
from pathlib import Path

root = str(Path(__file__).resolve().parents[1])
sys.path.append(root)

from src.exactalg import (
    Ideal,
    Poly,
    colon,
    elimination,
    ideal_product,
    ideal_sum,
    ideals_equal,
    intersection,
    is_nonzerodivisor,
    radical_contains,
    saturation,
    vspace_dim,
)
from src.exception import SignatureMismatch

XY = ("x", "y")


def I(*texts, ring=XY):
    return Ideal.parse(list(texts), ring)


def P(text, ring=XY):
    return Poly.parse(text, ring)


class TestSaturationAndColon(unittest.TestCase):

    def test_saturation_removes_component(self):
        self.assertTrue(ideals_equal(saturation(I("x*y"), P("y")), I("x")))

    def test_saturation_by_one_is_identity(self):
        J = I("x^2 - y", "x*y")
        self.assertTrue(ideals_equal(saturation(J, P("1")), J))

    def test_saturation_of_nilpotent_is_unit(self):
        self.assertTrue(saturation(I("x^2", ring=("x",)), P("x", ("x",))).is_unit())

    def test_saturation_is_idempotent(self):
        J = I("x^2*y", "x*y^3")
        once = saturation(J, P("x"))
        twice = saturation(once, P("x"))
        self.assertTrue(ideals_equal(once, twice))

    def test_colon(self):
        self.assertTrue(ideals_equal(colon(I("x*y"), P("x")), I("y")))
        self.assertTrue(ideals_equal(colon(I("x^2", "y"), P("x")), I("x", "y")))

    def test_intersection(self):
        self.assertTrue(ideals_equal(intersection(I("x"), I("y")), I("x*y")))
        self.assertTrue(intersection(I("x"), Ideal.zero(XY)).is_zero())


class TestElimination(unittest.TestCase):

    def test_drops_auxiliary_variable(self):
        ring = ("t", "x", "y")
        eliminated = elimination(Ideal.parse(["t*x - 1", "t*y"], ring), ["t"])
        self.assertEqual(eliminated.ring, XY)
        self.assertTrue(ideals_equal(eliminated, I("y")))

    def test_implicitization_of_cusp(self):
        ring = ("t", "a", "b")
        graph = Ideal.parse(["a - t^2", "b - t^3"], ring)
        self.assertTrue(ideals_equal(elimination(graph, ["t"]), Ideal.parse(["a^3 - b^2"], ("a", "b"))))


class TestIdealArithmetic(unittest.TestCase):

    def test_equal_different_generators(self):
        self.assertTrue(ideals_equal(I("x", "y"), I("y", "x + y")))
        self.assertFalse(ideals_equal(I("x"), I("x^2")))

    def test_sum_product_power(self):
        self.assertTrue(ideals_equal(ideal_sum(I("x"), I("y")), I("x", "y")))
        self.assertTrue(ideals_equal(ideal_product(I("x"), I("y")), I("x*y")))
        self.assertTrue(ideals_equal(I("x", "y").power(2), I("x^2", "x*y", "y^2")))
        self.assertTrue(I("x").power(0).is_unit())

    def test_membership_operator(self):
        J = I("x^2 - y")
        self.assertIn(P("x^4 - y^2"), J)
        self.assertNotIn(P("x"), J)

    def test_ring_mismatch(self):
        with self.assertRaises(SignatureMismatch):
            I("x").sum(Ideal.parse(["x"], ("x",)))

    def test_printing(self):
        self.assertEqual(str(I("x*y", "y^2 - 1")), "<x*y, y^2 - 1>")


class TestNonzerodivisor(unittest.TestCase):

    def test_zero_divisor(self):
        self.assertFalse(is_nonzerodivisor(P("x"), I("x*y")))

    def test_domain(self):
        self.assertTrue(is_nonzerodivisor(P("x", ("x",)), Ideal.zero(("x",))))
        self.assertTrue(is_nonzerodivisor(P("x"), I("y^2 - x^3")))

    def test_sum_on_cross(self):
        self.assertTrue(is_nonzerodivisor(P("x + y"), I("x*y")))


class TestDimensionAndRadical(unittest.TestCase):

    def test_vspace_dim(self):
        self.assertEqual(vspace_dim(I("x^2", ring=("x",))), 2)
        self.assertEqual(vspace_dim(Ideal.unit(XY)), 0)
        self.assertIsNone(vspace_dim(I("x")))
        self.assertEqual(vspace_dim(I("x^2", "y^2")), 4)
        self.assertEqual(vspace_dim(I("x^2", "x*y", "y^2")), 3)
        self.assertEqual(vspace_dim(I("y^2 - 2", ring=("y",))), 2)

    def test_standard_monomials(self):
        basis = I("x^2", "x*y", "y^2").standard_monomials()
        self.assertEqual([m.to_str() for m in basis], ["x", "y", "1"])
        self.assertIsNone(I("x").standard_monomials())

    def test_radical_contains(self):
        self.assertTrue(radical_contains(I("x^2", ring=("x",)), P("x", ("x",))))
        self.assertFalse(radical_contains(I("x"), P("y")))
        self.assertTrue(radical_contains(I("x^2 + y^2", "x - y"), P("x")))


if __name__ == "__main__":
    unittest.main()
