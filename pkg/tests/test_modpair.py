import itertools
import sys
import unittest
from pathlib import Path

root = str(Path(__file__).resolve().parents[1])
sys.path.append(root)

from src.affine import Presentation
from src.exactalg import Ideal, Poly, macaulay_unit
from src.exception import (
    CenterNotInDivisor,
    DivisorNotCartier,
    InteriorNotIso,
    MissingIntegralityWitness,
    NotAdmissible,
    NotCoveringInterior,
    NotDisjointOnInterior,
    NotJointlySurjective,
    NotPrincipalOpen,
)
from src.modpair import (
    BlowupInDivisor,
    ComponentClosure,
    CoverMember,
    RqfhNode,
    ambient_morphism,
    certify_sigma,
    check_admissible,
    check_cover,
    compose,
    compose_sigmas,
    decompose_interior,
    equal_on_interior,
    finite_member,
    identity,
    identity_sigma,
    interior,
    make_pair,
    principal_open_member,
    rescale_divisor,
    sigma_blowup,
)


def ring(variables, *relations):
    return Presentation.parse(tuple(variables.split()), relations)


def line(name, divisor):
    return make_pair([(ring(name), divisor)])


class TestMakePair(unittest.TestCase):

    def test_line(self):
        pair = line("x", "x")
        self.assertEqual(len(pair), 1)
        self.assertEqual(pair[0].divisor.to_str(), "x")

    def test_cross_with_sum(self):
        pair = make_pair([(ring("x y", "x*y"), "x + y")])
        self.assertEqual(pair.describe()[0]["ring"], "Q[x, y] / <x*y>")

    def test_nonzerodivisor_witnesses(self):
        pair = make_pair([(ring("x y", "x*y"), "x + y"), (ring("x", "1"), "x")])
        witness, empty = pair.witnesses
        self.assertTrue(witness.equal(pair[0].presentation.ideal))
        self.assertTrue(witness.contains(Poly.parse("x*y", ("x", "y"))))
        self.assertIsNone(empty)

    def test_zero_divisor_rejected(self):
        with self.assertRaises(DivisorNotCartier) as ctx:
            make_pair([(ring("x y", "x*y"), "x")])
        self.assertEqual(ctx.exception.chart, 0)

    def test_printing(self):
        self.assertEqual(line("x", "x^2").to_str(),
                         "pair {\n  chart {\n    ring Q[x];\n    divisor x^2;\n  }\n}")


class TestInterior(unittest.TestCase):

    def test_line(self):
        local = interior(line("x", "x"))[0]
        self.assertTrue(local.presentation.same_as(ring("x u", "u*x - 1")))

    def test_empty_modulus(self):
        local = interior(line("x", 1))[0]
        self.assertTrue(local.presentation.equal_mod("u", 1))
        self.assertFalse(local.presentation.is_unit("x"))

    def test_cross_is_disconnected(self):
        local = interior(make_pair([(ring("x y", "x*y"), "x + y")]))[0].presentation
        e = local.poly("u*x")
        self.assertTrue(local.equal_mod(e * e, e))
        self.assertFalse(local.contains(e))
        self.assertFalse(local.equal_mod(e, 1))


class TestAdmissibility(unittest.TestCase):

    def test_minimal(self):
        f = ambient_morphism(line("x", "x^2"), line("y", "y"), [(0, ["x^2"])])
        self.assertTrue(f.admissible)
        self.assertTrue(f.minimal)
        self.assertEqual(f.verdicts[0].admissible_cofactor.to_str(), "1")

    def test_not_admissible(self):
        source, target = line("x", "x"), line("y", "y")
        f = ambient_morphism(source, target, [(0, ["x^2"])])
        self.assertFalse(f.admissible)
        with self.assertRaises(NotAdmissible) as ctx:
            check_admissible(source, target, f.maps)
        self.assertEqual(ctx.exception.chart, 0)

    def test_admissible_not_minimal(self):
        f = ambient_morphism(line("x", "x^2"), line("y", "y"), [(0, ["x"])])
        self.assertTrue(f.admissible)
        self.assertFalse(f.minimal)
        self.assertEqual(f.verdicts[0].admissible_cofactor.to_str(), "x")

    def test_composition_preserves_verdicts(self):
        for a, b, c, m, n in itertools.product((1, 2, 3), (1, 2, 3), (1, 2), (1, 2), (1, 2)):
            X, Y, Z = line("x", f"x^{a}"), line("y", f"y^{b}"), line("z", f"z^{c}")
            f = ambient_morphism(X, Y, [(0, [f"x^{m}"])])
            g = ambient_morphism(Y, Z, [(0, [f"y^{n}"])])
            gf = compose(f, g)
            self.assertEqual(gf.maps[0].ring_map.images[0].to_str(), f"x^{m * n}" if m * n > 1 else "x")
            if f.admissible and g.admissible:
                self.assertTrue(gf.admissible, msg=(a, b, c, m, n))
            if f.minimal and g.minimal:
                self.assertTrue(gf.minimal, msg=(a, b, c, m, n))

    def test_unit_rescaling(self):
        for source_divisor, image in (("x^2", "x^2"), ("x", "x^2"), ("x^2", "x")):
            X, Y = line("x", source_divisor), line("y", "y")
            before = ambient_morphism(X, Y, [(0, [image])])
            after = ambient_morphism(rescale_divisor(X, [-1]), rescale_divisor(Y, [3]), [(0, [image])])
            self.assertEqual(before.admissible, after.admissible)
            self.assertEqual(before.minimal, after.minimal)

    def test_rescale_by_non_unit(self):
        with self.assertRaises(DivisorNotCartier):
            rescale_divisor(line("y", "y"), ["y"])

    def test_identity(self):
        pair = make_pair([(ring("x y", "x*y"), "x + y")])
        self.assertTrue(identity(pair).minimal)


class TestEqualOnInterior(unittest.TestCase):

    def setUp(self):
        self.cross = make_pair([(ring("x y", "x*y"), "x + y")])

    def test_reflexive(self):
        f = identity(self.cross)
        self.assertTrue(equal_on_interior(f, f))

    def test_syntactically_different(self):
        X, Y = line("x", "x"), line("y", "y")
        f = ambient_morphism(X, Y, [(0, ["x"])])
        g = ambient_morphism(X, Y, [(0, ["x + 0*x^2"])])
        self.assertTrue(equal_on_interior(f, g))

    def test_agree_on_one_component(self):
        f = identity(self.cross)
        g = ambient_morphism(self.cross, self.cross, [(0, ["x", "0"])])
        self.assertFalse(equal_on_interior(f, g))

    def test_through_gluing(self):
        blown = sigma_blowup(make_pair([(ring("x t"), "x*t")]), [["x", "t"]]).source
        A = line("a", "a^2")
        first = ambient_morphism(A, blown, [(0, ["a", "a", "1"])])
        second = ambient_morphism(A, blown, [(1, ["a", "a", "1"])])
        other = ambient_morphism(A, blown, [(1, ["a", "2*a", "1/2"])])
        self.assertTrue(equal_on_interior(first, second))
        self.assertFalse(equal_on_interior(first, other))


class TestSigma(unittest.TestCase):

    def setUp(self):
        self.plane = make_pair([(ring("x t"), "x*t")])

    def test_blowup_in_divisor(self):
        sigma = sigma_blowup(self.plane, [["x", "t"]])
        self.assertIsInstance(sigma.certificate, BlowupInDivisor)
        self.assertEqual(len(sigma.source), 2)
        self.assertEqual(set(sigma.source.gluings), {(0, 1), (1, 0)})
        self.assertTrue(check_admissible(sigma.source, sigma.target, sigma.morphism.maps).minimal)

    def test_recertify(self):
        sigma = sigma_blowup(self.plane, [["x", "t"]])
        again = certify_sigma(sigma.morphism, sigma.certificate)
        self.assertIs(again.target, self.plane)
        with self.assertRaises(InteriorNotIso):
            certify_sigma(identity(self.plane), sigma.certificate)

    def test_identity(self):
        sigma = identity_sigma(self.plane)
        self.assertEqual(len(sigma.source), 1)
        self.assertTrue(sigma.source[0].presentation.same_as(self.plane[0].presentation))

    def test_center_outside_divisor(self):
        with self.assertRaises(CenterNotInDivisor):
            sigma_blowup(make_pair([(ring("x t"), "t")]), [["x"]])

    def test_composite(self):
        first = sigma_blowup(self.plane, [["x", "t"]])
        second = identity_sigma(first.source)
        composite = compose_sigmas([first, second])
        self.assertEqual(composite.describe()["steps"], ["blowup", "blowup"])
        self.assertTrue(composite.morphism.minimal)
        self.assertIs(composite.target, self.plane)


class TestCovers(unittest.TestCase):

    def setUp(self):
        self.line = line("x", "x")

    def test_zariski(self):
        members = [principal_open_member(self.line, "x"), principal_open_member(self.line, "1 - x")]
        verdict = check_cover("zar", members)
        self.assertEqual(verdict.members, 2)
        self.assertEqual(len(verdict.witnesses["chart 0"]), 2)

    def test_zariski_not_surjective(self):
        with self.assertRaises(NotJointlySurjective):
            check_cover("zar", [principal_open_member(self.line, "x")])

    def test_not_principal_open(self):
        member = CoverMember(identity(self.line), element=self.line[0].divisor)
        with self.assertRaises(NotPrincipalOpen):
            check_cover("zar", [member])

    def test_finite(self):
        f = ambient_morphism(line("x", "x^2"), line("y", "y"), [(0, ["x^2"])])
        verdict = check_cover("fin", [finite_member(f, {"x": "T^2 - y"})])
        self.assertEqual(verdict.kind, "fin")

    def test_finite_needs_monic_witness(self):
        f = ambient_morphism(line("x", "x^2"), line("y", "y"), [(0, ["x^2"])])
        for witnesses in ({}, {"x": "2*T^2 - 2*y"}, {"x": "y*T^2 - 1"}, {"x": "T^2 - y - 1"}):
            with self.assertRaises(MissingIntegralityWitness, msg=witnesses):
                check_cover("fin", [finite_member(f, witnesses)])

    def test_finite_not_surjective(self):
        point = make_pair([(ring("a", "a"), 1)])
        f = ambient_morphism(point, line("y", 1), [(0, ["0"])])
        with self.assertRaises(NotJointlySurjective):
            check_cover("fin", [finite_member(f, {"a": "T"})])

    def test_rqfh_tree(self):
        members = [principal_open_member(self.line, "x"), principal_open_member(self.line, "1 - x")]
        child = RqfhNode("zar", [principal_open_member(members[0].morphism.source, "x")])
        verdict = check_cover("rqfh", RqfhNode("zar", members, {0: child}))
        self.assertEqual(verdict.witnesses["depth"], 1)

    def test_zariski_agrees_with_oracle(self):
        families = [
            ("", 1, ["x", "y"]),
            ("", 1, ["x", "1 - x"]),
            ("", 1, ["x + y", "x - y"]),
            ("", 1, ["x", "y - 1"]),
            ("", 1, ["x^2", "1 - x*y"]),
            ("x*y", "x + y", ["x", "y"]),
            ("x*y", "x + y", ["x + y", "1 - x"]),
            ("x*y", "x + y", ["x - 1", "y - 1"]),
        ]
        for relation, divisor, family in families:
            base = ring("x y", relation) if relation else ring("x y")
            pair = make_pair([(base, divisor)])
            members = [principal_open_member(pair, f) for f in family]
            try:
                check_cover("zar", members)
                accepted = True
            except NotJointlySurjective:
                accepted = False
            expected = macaulay_unit(base.ideal.with_generators([base.poly(f) for f in family]), 6)
            self.assertEqual(accepted, expected, msg=family)


class TestDecomposeInterior(unittest.TestCase):

    def test_cross(self):
        pair = make_pair([(ring("x y", "x*y"), "x + y")])
        split = decompose_interior(pair, Ideal.parse(["x"], ("x", "y")), Ideal.parse(["y"], ("x", "y")))
        first, second = split.parts
        self.assertTrue(first[0].presentation.same_as(ring("x y", "x")))
        self.assertEqual(first[0].divisor.to_str(), "y")
        self.assertTrue(second[0].presentation.same_as(ring("x y", "y")))
        self.assertEqual(second[0].divisor.to_str(), "x")
        self.assertIsInstance(split.sigma.certificate, ComponentClosure)
        self.assertEqual(len(split.sigma.source), 2)

    def test_trivial_split(self):
        pair = line("x", "x")
        split = decompose_interior(pair, Ideal.zero(("x",)), Ideal.unit(("x",)))
        self.assertTrue(split.parts[0][0].presentation.same_as(pair[0].presentation))
        self.assertTrue(split.parts[1].is_empty())

    def test_not_disjoint(self):
        J = Ideal.parse(["x"], ("x",))
        with self.assertRaises(NotDisjointOnInterior):
            decompose_interior(line("x", "x - 1"), J, J)

    def test_not_covering(self):
        with self.assertRaises(NotCoveringInterior):
            decompose_interior(line("x", 1), Ideal.parse(["x"], ("x",)), Ideal.parse(["x - 1"], ("x",)))


if __name__ == "__main__":
    unittest.main()
