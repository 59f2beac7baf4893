import sys
import unittest
from pathlib import Path

root = str(Path(__file__).resolve().parents[1])
sys.path.append(root)

from src.affine import (
    Presentation,
    RingMap,
    blowup_charts,
    check_gluing,
    closure_of_principal_open,
    kernel,
    localize,
    make_ring_map,
    strict_transform,
    tensor_over,
)
from src.exactalg import Ideal
from src.exception import DivisorIsZero, EmptyCenter, RelationNotPreserved


def ring(variables, *relations):
    return Presentation.parse(tuple(variables.split()), relations)


class TestRingMaps(unittest.TestCase):

    def test_free_source(self):
        f = make_ring_map(ring("y"), ring("x"), ["x^2"])
        self.assertEqual(f.to_str(), "y -> x^2")

    def test_cusp_parametrization(self):
        f = make_ring_map(ring("a b", "a^3 - b^2"), ring("t"), ["t^2", "t^3"])
        self.assertEqual(f.apply("a*b").to_str(), "t^5")

    def test_relation_not_preserved(self):
        with self.assertRaises(RelationNotPreserved) as ctx:
            make_ring_map(ring("a", "a^2"), ring("x"), ["x"])
        self.assertEqual(ctx.exception.index, 0)

    def test_composition(self):
        f = make_ring_map(ring("y"), ring("x"), ["x^2"])
        g = make_ring_map(ring("x"), ring("t"), ["t + 1"])
        self.assertEqual(f.then(g).images[0], ring("t").poly("t^2 + 2*t + 1"))


class TestLocalization(unittest.TestCase):

    def test_line(self):
        loc = localize(ring("x"), "x")
        self.assertEqual(loc.presentation.variables, ("x", "u"))
        self.assertTrue(loc.presentation.contains("u*x - 1"))
        self.assertTrue(loc.presentation.equal_mod(loc.presentation.inverse("x"), "u"))

    def test_cross_splits(self):
        loc = localize(ring("x y", "x*y"), "x + y")
        P = loc.presentation
        e = P.poly("u*x")
        self.assertTrue(P.equal_mod(e * e, e))
        self.assertFalse(P.contains(e))
        self.assertFalse(P.equal_mod(e, 1))

    def test_zero_divisor(self):
        with self.assertRaises(DivisorIsZero):
            localize(ring("x", "x"), "x")


class TestTensorAndKernel(unittest.TestCase):

    def test_over_point(self):
        point = Presentation.point()
        X, T = ring("x"), ring("t")
        product = tensor_over(point, RingMap(point, X, []), RingMap(point, T, []))
        self.assertEqual(product.presentation.variables, ("x", "t"))
        self.assertTrue(product.presentation.ideal.is_zero())

    def test_over_line(self):
        S = ring("s")
        X, T = ring("x"), ring("t")
        product = tensor_over(S, make_ring_map(S, X, ["x^2"]), make_ring_map(S, T, ["t^2"]))
        expected = Ideal.parse(["x^2 - t^2"], ("x", "t"))
        self.assertTrue(product.presentation.ideal.equal(expected))

    def test_empty_factor(self):
        point = Presentation.point()
        X, E = ring("x"), ring("t", "1")
        product = tensor_over(point, RingMap(point, X, []), RingMap(point, E, []))
        self.assertTrue(product.presentation.is_empty())

    def test_clashing_names(self):
        point = Presentation.point()
        X = ring("x")
        product = tensor_over(point, RingMap(point, X, []), RingMap(point, X, []))
        self.assertEqual(product.presentation.variables, ("x", "x1"))
        self.assertEqual(product.right.images[0].to_str(), "x1")

    def test_kernels(self):
        A = ring("a b")
        self.assertTrue(kernel(RingMap.identity(A)).is_zero())
        cusp = kernel(make_ring_map(A, ring("t"), ["t^2", "t^3"]))
        self.assertTrue(cusp.equal(Ideal.parse(["a^3 - b^2"], ("a", "b"))))
        unit_line = localize(ring("x"), "x").presentation
        self.assertTrue(kernel(make_ring_map(ring("a"), unit_line, ["x"])).equal(Ideal.zero(("a",))))

    def test_image_of_interior_is_closure(self):
        P = ring("x y", "x*y")
        loc = localize(P, "x")
        self.assertTrue(kernel(loc.inclusion).equal(closure_of_principal_open(P, "x").ideal))


class TestClosure(unittest.TestCase):

    def test_cross_component(self):
        closed = closure_of_principal_open(ring("x y", "x*y"), "x")
        self.assertTrue(closed.same_as(ring("x y", "y")))

    def test_already_dense(self):
        self.assertTrue(closure_of_principal_open(ring("x"), "x").same_as(ring("x")))

    def test_empty(self):
        self.assertTrue(closure_of_principal_open(ring("x", "x"), "x").is_empty())


class TestBlowupCharts(unittest.TestCase):

    def test_plane_at_origin(self):
        charts = blowup_charts(ring("x t"), ["x", "t"])
        self.assertEqual(len(charts), 2)
        first, second = charts.charts
        self.assertEqual(first.presentation.variables, ("x", "t", "z1"))
        self.assertTrue(first.presentation.ideal.equal(Ideal.parse(["x*z1 - t"], ("x", "t", "z1"))))
        self.assertTrue(second.presentation.ideal.equal(Ideal.parse(["t*z0 - x"], ("x", "t", "z0"))))
        self.assertEqual(first.exceptional.to_str(), "x")
        self.assertEqual(second.exceptional.to_str(), "t")
        self.assertEqual(charts.nonempty(), [0, 1])

    def test_principal_center_is_trivial(self):
        base = ring("x")
        charts = blowup_charts(base, ["x"])
        self.assertEqual(len(charts), 1)
        self.assertTrue(charts.charts[0].presentation.same_as(base))
        self.assertEqual(charts.gluings, {})

    def test_cusp_is_resolved(self):
        charts = blowup_charts(ring("x y", "y^2 - x^3"), ["x", "y"])
        expected = Ideal.parse(["y - x*z1", "z1^2 - x"], ("x", "y", "z1"))
        self.assertTrue(charts.charts[0].presentation.ideal.equal(expected))

    def test_empty_center(self):
        with self.assertRaises(EmptyCenter):
            blowup_charts(ring("x"), [])

    def test_empty_chart_is_flagged(self):
        charts = blowup_charts(ring("x y", "y"), ["x", "y"])
        self.assertEqual([c.empty for c in charts.charts], [False, True])
        self.assertTrue(check_gluing(charts, 0, 1))

    def test_gluing_coherence(self):
        for base, center in [(ring("x t"), ["x", "t"]), (ring("x y", "y^2 - x^3"), ["x", "y"]),
                             (ring("x y z"), ["x", "y", "z"])]:
            charts = blowup_charts(base, center)
            for i, j in charts.gluings:
                self.assertTrue(check_gluing(charts, i, j), msg=f"{base} {center} {(i, j)}")

    def test_nonzerodivisor_stays_nonzerodivisor(self):
        charts = blowup_charts(ring("x t"), ["x", "t"])
        for f in ("x", "t", "x*t"):
            for index in range(len(charts)):
                pulled = charts.base_map(index).apply(f)
                self.assertTrue(charts.charts[index].presentation.is_nonzerodivisor(pulled))


class TestStrictTransform(unittest.TestCase):

    def setUp(self):
        self.charts = blowup_charts(ring("x t"), ["x", "t"])

    def test_line_through_center(self):
        first = strict_transform(self.charts, Ideal.parse(["t"], ("x", "t")))[0]
        expected = self.charts.charts[0].presentation.ideal.with_generators(
            [self.charts.charts[0].presentation.poly("z1")])
        self.assertTrue(first.equal(expected))

    def test_zero_ideal(self):
        for chart, transform in zip(self.charts.charts, strict_transform(self.charts, Ideal.zero(("x", "t")))):
            self.assertTrue(transform.equal(chart.presentation.ideal))

    def test_center_disappears(self):
        for transform in strict_transform(self.charts, Ideal.parse(["x", "t"], ("x", "t"))):
            self.assertTrue(transform.is_unit())


if __name__ == "__main__":
    unittest.main()
