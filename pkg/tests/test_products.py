import random
import sys
import unittest
from pathlib import Path

root = str(Path(__file__).resolve().parents[1])
sys.path.append(root)

from src.affine import Presentation
from src.exception import DivisorIsZero, SquareDoesNotCommute
from src.modpair import (
    ambient_morphism,
    coproduct,
    equal_on_interior,
    identity,
    make_pair,
    sigma_blowup,
)
from src.products import (
    ambient_product,
    box_product,
    box_to_times,
    build_AisoC,
    exceptional_check,
    fibre_fill_in,
    interior_comparison,
    key_lemma_check,
    tensor_fiber_check,
)


def ring(variables, *relations):
    return Presentation.parse(tuple(variables.split()), relations)


def line(name, divisor):
    return make_pair([(ring(name), divisor)])


def point():
    return make_pair([(Presentation.point(), 1)])


def to_point(pair, base):
    return ambient_morphism(pair, base, [(0, [])] * len(pair))


def lines_over_point():
    S = point()
    X, T = line("x", "x"), line("t", "t")
    return to_point(X, S), to_point(T, S)


class TestAmbientProduct(unittest.TestCase):

    def test_lines_over_point(self):
        f, g = lines_over_point()
        result = ambient_product(f, g)
        self.assertEqual(len(result.pair), 2)
        self.assertTrue(result.blocks[0].blown_up)
        chart0, chart1 = result.pair.charts
        self.assertEqual(chart0.presentation.variables, ("x", "t", "z1"))
        self.assertEqual(chart1.presentation.variables, ("x", "t", "z0"))
        self.assertTrue(chart0.presentation.equal_mod(chart0.divisor, "t*z1"))
        self.assertTrue(chart1.presentation.equal_mod(chart1.divisor, "x*z0"))
        self.assertTrue(result.proj_x.admissible and result.proj_t.admissible)

    def test_exceptional_and_key_lemma(self):
        result = ambient_product(*lines_over_point())
        self.assertEqual(len(exceptional_check(result)), 2)
        report = key_lemma_check(result, ["x*t", "x^2*t"])
        self.assertEqual(report.disjoint, [True, True])
        self.assertEqual(report.bounds_checked, 4)

    def test_minimal_factor_needs_no_blowup(self):
        S = line("s", "s")
        X = make_pair([(ring("s x"), "s")])
        f = ambient_morphism(X, S, [(0, ["s"])])
        result = ambient_product(f, identity(S))
        self.assertEqual(len(result.pair), 1)
        self.assertFalse(result.blocks[0].blown_up)
        chart = result.pair[0]
        self.assertTrue(chart.presentation.equal_mod(chart.divisor, "s"))

    def test_interior_comparison(self):
        result = ambient_product(*lines_over_point())
        entry = interior_comparison(result)[0]
        self.assertTrue(entry["localization"])
        self.assertTrue(entry["support"])
        self.assertEqual(entry["certified"], "blowup")

    def test_random_products_over_a_line(self):
        rng = random.Random(7)
        S = line("s", "s")
        for _ in range(25):
            m, n = rng.choice([1, 2]), rng.choice([1, 2])
            a, b = m + rng.randint(0, 2), n + rng.randint(0, 2)
            f = ambient_morphism(line("x", f"x^{a}"), S, [(0, [f"x^{m}"])])
            g = ambient_morphism(line("t", f"t^{b}"), S, [(0, [f"t^{n}"])])
            result = ambient_product(f, g)
            exceptional_check(result)
            report = key_lemma_check(result, [f"x^{a}*t^{b}", f"x^{a + 1}*t^{b}"])
            self.assertTrue(all(report.disjoint))
            self.assertGreaterEqual(report.bounds_checked, len(report.disjoint))
            if b == n:
                self.assertFalse(result.blocks[0].blown_up)

    def test_sigma_stable_under_base_change(self):
        P = make_pair([(ring("x t"), "x*t")])
        sigma = sigma_blowup(P, [["x", "t"]])
        g = ambient_morphism(line("a", "a^2"), P, [(0, ["a", "a"])])
        result = ambient_product(sigma.morphism, g)
        self.assertTrue(result.proj_t.minimal)


class TestBoxProduct(unittest.TestCase):

    def test_lines_over_point(self):
        box = box_product(*lines_over_point())
        self.assertEqual(len(box.pair), 1)
        chart = box.pair[0]
        self.assertTrue(chart.presentation.equal_mod(chart.divisor, "x*t"))

    def test_one_copy_of_the_base_divided_out(self):
        S = line("s", "s")
        f = ambient_morphism(make_pair([(ring("s x"), "s*x")]), S, [(0, ["s"])])
        g = ambient_morphism(make_pair([(ring("s t"), "s*t")]), S, [(0, ["s"])])
        chart = box_product(f, g).pair[0]
        self.assertEqual(chart.presentation.variables, ("s", "x", "s1", "t"))
        self.assertTrue(chart.presentation.equal_mod(chart.divisor, "s*x*t"))

    def test_base_is_a_unit(self):
        S = line("s", "s")
        f = ambient_morphism(make_pair([(ring("s x"), "s*x")]), S, [(0, ["s"])])
        chart = box_product(f, identity(S)).pair[0]
        self.assertTrue(chart.presentation.equal_mod(chart.divisor, "s*x"))


SQUARES = [
    ("a", (), "a", "a", "a", False),
    ("a", (), "a^2", "a", "a^2", False),
    ("a", (), "a^3", "a^2", "a^3", False),
    ("a", (), "a^2", "a^2", "a", False),
    ("a b", (), "a*b", "a", "b", True),
    ("a b", (), "a^2*b", "a^2", "b", True),
    ("a b", (), "a*b", "a*b", "a*b", False),
    ("a", (), "1", "1", "1", False),
    ("a b", ("b^2 - a^3",), "a^3", "a", "b", True),
    ("a", (), "a*(a - 1)", "a", "a - 1", True),
]


class TestFillIn(unittest.TestCase):

    def setUp(self):
        self.f, self.g = lines_over_point()
        self.product = ambient_product(self.f, self.g)

    def legs(self, variables, relations, divisor, x_image, t_image):
        A = make_pair([(ring(variables, *relations), divisor)])
        a = ambient_morphism(A, self.f.source, [(0, [x_image])])
        b = ambient_morphism(A, self.g.source, [(0, [t_image])])
        return a, b

    def test_squares(self):
        for variables, relations, divisor, x_image, t_image, blown in SQUARES:
            with self.subTest(divisor=divisor, x=x_image, t=t_image):
                a, b = self.legs(variables, relations, divisor, x_image, t_image)
                first = fibre_fill_in(self.product, a, b, prefer=0)
                second = fibre_fill_in(self.product, a, b, prefer=1)
                self.assertEqual(first.sigma is not None, blown)
                self.assertTrue(first.commutes(self.product, a, b))
                self.assertTrue(equal_on_interior(first.morphism, second.morphism))

    def test_direct_lift_images(self):
        a, b = self.legs("a", (), "a", "a", "a")
        fill = fibre_fill_in(self.product, a, b)
        self.assertEqual(fill.morphism.maps[0].target_chart, 0)
        self.assertEqual(fill.morphism.maps[0].ring_map.image("z1").to_str(), "1")
        other = fibre_fill_in(self.product, a, b, prefer=1)
        self.assertEqual(other.morphism.maps[0].target_chart, 1)
        self.assertEqual(other.morphism.maps[0].ring_map.image("z0").to_str(), "1")

    def test_product_fills_itself(self):
        fill = fibre_fill_in(self.product, self.product.proj_x, self.product.proj_t)
        self.assertIsNone(fill.sigma)
        self.assertEqual([m.target_chart for m in fill.morphism.maps], [0, 1])
        self.assertTrue(equal_on_interior(fill.morphism, identity(self.product.pair)))

    def test_square_must_commute(self):
        S = line("s", "1")
        f = ambient_morphism(line("x", "x"), S, [(0, ["x"])])
        g = ambient_morphism(line("t", "t"), S, [(0, ["t"])])
        product = ambient_product(f, g)
        A = line("a", "a")
        a = ambient_morphism(A, f.source, [(0, ["a"])])
        b = ambient_morphism(A, g.source, [(0, ["2*a"])])
        with self.assertRaises(SquareDoesNotCommute):
            fibre_fill_in(product, a, b)


class TestBoxToTimes(unittest.TestCase):

    def test_lines_over_point(self):
        roof = box_to_times(*lines_over_point())
        self.assertEqual(roof.sigma.certificate.kind, "blowup")
        self.assertEqual(len(roof.sigma.source), 2)
        self.assertTrue(roof.morphism.admissible)
        self.assertEqual(roof.witnesses(), ["t", "x"])

    def test_flat_minimal_case_is_identity(self):
        S = line("s", "s")
        f = ambient_morphism(make_pair([(ring("s x"), "s")]), S, [(0, ["s"])])
        g = identity(S)
        box = box_product(f, g)
        times = ambient_product(f, g)
        self.assertEqual(len(box.pair), len(times.pair))
        for ours, theirs in zip(box.pair.charts, times.pair.charts):
            self.assertTrue(ours.presentation.same_as(theirs.presentation))
            self.assertIsNotNone(ours.presentation.in_principal(ours.divisor, theirs.divisor))
            self.assertIsNotNone(ours.presentation.in_principal(theirs.divisor, ours.divisor))
        roof = box_to_times(f, g)
        self.assertEqual(len(roof.sigma.source), 1)
        self.assertTrue(roof.morphism.minimal)

    def test_cusp(self):
        S = point()
        cusp = make_pair([(ring("x y", "y^2 - x^3"), "x")])
        roof = box_to_times(to_point(cusp, S), to_point(line("t", "t"), S))
        self.assertTrue(roof.morphism.admissible)


class TestAisoC(unittest.TestCase):

    def test_line(self):
        report = build_AisoC(ring("x"), "x")
        self.assertEqual(len(report.charts), 3)
        self.assertTrue(report.passed)

    def test_cross_divisor(self):
        self.assertTrue(build_AisoC(ring("x y"), "x*y").passed)

    def test_cusp(self):
        self.assertTrue(build_AisoC(ring("x y", "y^2 - x^3"), "x").passed)

    def test_unit(self):
        self.assertTrue(build_AisoC(ring("x"), "1").passed)

    def test_zero_divisor(self):
        with self.assertRaises(DivisorIsZero):
            build_AisoC(ring("x"), "0")
        with self.assertRaises(DivisorIsZero):
            build_AisoC(ring("x y", "x*y"), "x")


class TestTensorFiber(unittest.TestCase):

    def test_three_lines(self):
        S = line("s", "s")
        f = ambient_morphism(line("y", "y^2"), S, [(0, ["y"])])
        g = ambient_morphism(line("z", "z"), S, [(0, ["z"])])
        h = ambient_morphism(line("t", "t^2"), S, [(0, ["t"])])
        report = tensor_fiber_check(f, g, h)
        self.assertEqual(report.claim, [True])
        self.assertEqual(report.divisors, [True])
        self.assertEqual(report.interiors, [True])
        self.assertTrue(report.passed)

    def test_trivial_moduli(self):
        S = line("s", "1")
        f = ambient_morphism(line("y", "1"), S, [(0, ["y"])])
        g = ambient_morphism(line("z", "1"), S, [(0, ["z^2"])])
        h = ambient_morphism(line("t", "1"), S, [(0, ["t"])])
        self.assertTrue(tensor_fiber_check(f, g, h).passed)


class TestCoproduct(unittest.TestCase):

    def test_two_lines(self):
        both = coproduct(line("x", "x"), line("t", "t"))
        self.assertEqual(len(both), 2)
        self.assertEqual(both.gluings, {})


if __name__ == "__main__":
    unittest.main()
