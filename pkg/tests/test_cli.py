import io
import json
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

root = str(Path(__file__).resolve().parents[1])
sys.path.append(root)

from src.cli import EXIT_OK, EXIT_SCRIPT_ERROR, EXIT_VERIFY_FAILED, canonical, parse, print_script, render_json, \
    render_text, run, validate
from src.cli.ast import Command, ComponentDecl, DivisorDecl, PairDecl
from src.cli.report import TIMING_RULE
from src.config import config
from src.config.cfg import Config
from src.exception import ParseError, ScriptValidationError
from src.exactalg.expr import BinOp, Num, Paren, Pow, Var

GOLDEN = Path(root) / "tests" / "golden"
AISOC = Path(root) / "docs" / "aisoc.mpd"


def scripts():
    return sorted(GOLDEN.glob("*.mpd")) + [AISOC]


def outcome(report, prefix):
    for item in report.outcomes:
        if item.text.startswith(prefix):
            return item
    raise AssertionError(f"no command starting with {prefix!r}")


LINES = """ring R = Q[x];
pair P {
  chart { ring R; divisor x; }
}
"""


class TestParse(unittest.TestCase):

    def test_pair(self):
        script = parse("ring R = Q[x]; pair P { chart { ring R; ideal 0; divisor x; } }")
        self.assertEqual(len(script.statements), 2)
        pair = script.statements[1]
        self.assertIsInstance(pair, PairDecl)
        self.assertEqual(pair.charts[0].ideal, 0)
        self.assertEqual(pair.charts[0].divisor, Var("x"))

    def test_expressions_keep_their_shape(self):
        divisor = parse("ring R = Q[x]; divisor D on R = (x + 1)^2;").statements[1]
        self.assertIsInstance(divisor, DivisorDecl)
        self.assertEqual(divisor.expr, Pow(Paren(BinOp("+", Var("x"), Num(1))), 2))

    def test_commands(self):
        script = parse("verify tensor-fiber F G H over B;\ncompose R1 R2;")
        first, second = script.commands
        self.assertEqual(first, Command("tensor-fiber", ("F", "G", "H", "B"), verify=True))
        self.assertEqual(first.line, 1)
        self.assertEqual(second.args, ("R1", "R2", None))
        self.assertFalse(second.verify)
        self.assertEqual(second.line, 2)

    def test_negative_multiplicity(self):
        text = ("correspondence C : X -> Y {\n"
                "  component <y - x> mult -2 charts 0, 1 normal Z { x -> x; y -> x; } proper asserted\n"
                "}\n")
        component = parse(text).statements[0].components[0]
        self.assertIsInstance(component, ComponentDecl)
        self.assertEqual(component.multiplicity, -2)
        self.assertEqual(component.charts, (0, 1))
        self.assertEqual(print_script(parse(text)), text)

    def test_malformed_divisor_clause(self):
        text = "ring R = Q[x];\npair P {\n  chart { ring R; divisor ; }\n}\n"
        with self.assertRaises(ParseError) as caught:
            parse(text)
        error = caught.exception
        self.assertEqual(error.line, 3)
        self.assertEqual(error.column, 27)
        self.assertIn("NAME", error.expected)
        self.assertIn("INT", error.expected)
        self.assertEqual(error.dict()["line"], 3)

    def test_unexpected_character(self):
        with self.assertRaises(ParseError) as caught:
            parse("ring R = Q[x] $;")
        self.assertEqual(caught.exception.line, 1)

    def test_comments_are_ignored(self):
        self.assertEqual(parse("# lines\n" + LINES), parse(LINES))


class TestPrinter(unittest.TestCase):

    def test_golden_scripts_are_canonical(self):
        for path in scripts():
            with self.subTest(script=path.name):
                text = path.read_text(encoding="utf-8")
                self.assertEqual(print_script(parse(text)), text)

    def test_layout_is_not_significant(self):
        for path in scripts():
            with self.subTest(script=path.name):
                text = path.read_text(encoding="utf-8")
                squashed = " ".join(text.split())
                self.assertEqual(print_script(parse(squashed)), text)


class TestValidation(unittest.TestCase):

    def check_rejected(self, text, fragment):
        with self.assertRaises(ScriptValidationError) as caught:
            validate(parse(text))
        self.assertIn(fragment, caught.exception.message)

    def test_duplicate_name(self):
        self.check_rejected(LINES + "ring P = Q[y];", "already declared")

    def test_undeclared(self):
        self.check_rejected(LINES + "admissible F;", "not declared")

    def test_wrong_kind(self):
        self.check_rejected(LINES + "groebner P;", "expected a ideal")

    def test_verify_needs_a_verdict(self):
        self.check_rejected("ring R = Q[x]; ideal I = <x> in R; verify groebner I;", "no verdict")

    def test_sigma_declares_its_source(self):
        scope = validate(parse(LINES + "sigma B : PB -> P blowup <x>;"))
        self.assertEqual(scope.kinds["PB"], "pair")
        self.assertEqual(scope.kinds["B"], "sigma")
        self.check_rejected(LINES + "sigma B : P -> P blowup <x>;", "already declared")

    def test_fill_needs_an_ambient_product(self):
        text = (LINES + "morphism F : P -> P { x -> x; }\n"
                "product box B = F, F over P;\nfill F, F over B;")
        self.check_rejected(text, "box product")

    def test_zero_multiplicity(self):
        text = (LINES + "correspondence C : P -> P {\n"
                "  component <x - x> mult 0 normal R { x -> x; x1 -> x; }\n}\n")
        self.check_rejected(text, "multiplicity 0")


class TestRun(unittest.TestCase):

    def run_file(self, path, order="grevlex"):
        return run(parse(Path(path).read_text(encoding="utf-8")), order=order)

    def test_golden_scripts_pass(self):
        for path in scripts():
            with self.subTest(script=path.name):
                report = self.run_file(path)
                self.assertIsNone(report.failure)
                self.assertEqual(report.exit_code, EXIT_OK)

    def test_aisoc_fixture(self):
        report = self.run_file(AISOC)
        self.assertEqual([o.result.verdict_text for o in report.outcomes], ["pass"] * 3)

    def test_membership(self):
        report = self.run_file(GOLDEN / "algebra.mpd")
        member = outcome(report, "verify member")
        self.assertEqual(member.result.witnesses["element"], "x^2")
        self.assertEqual(len(member.result.witnesses["cofactors"]), 3)
        self.assertEqual(member.result.witnesses["oracle"], "agrees")
        outside = outcome(report, "member x in M")
        self.assertFalse(outside.result.verdict)
        self.assertEqual(outside.result.witnesses["remainder"], "x")

    def test_dimension(self):
        report = self.run_file(GOLDEN / "algebra.mpd")
        witnesses = outcome(report, "dim M").result.witnesses
        self.assertEqual(witnesses["dimension"], 2)
        self.assertEqual(sorted(witnesses["monomials"]), ["1", "x"])

    def test_failed_verdicts_outside_verify(self):
        report = self.run_file(GOLDEN / "algebra.mpd")
        self.assertFalse(outcome(report, "admissible G").result.verdict)
        failed = outcome(report, "certified C").result
        self.assertFalse(failed.verdict)
        self.assertEqual(failed.error["type"], "CenterNotInDivisor")
        self.assertEqual(report.exit_code, EXIT_OK)

    def test_exceptional_witnesses(self):
        report = self.run_file(GOLDEN / "products.mpd")
        ambient = outcome(report, "verify product ambient").result
        self.assertTrue(ambient.verdict)
        self.assertEqual(len(ambient.witnesses["E"]), 2)
        self.assertTrue(all(ambient.witnesses["residuals disjoint"]))
        fibre = outcome(report, "verify product fibre").result
        self.assertTrue(fibre.witnesses["square commutes"])

    def test_roofs(self):
        report = self.run_file(GOLDEN / "roofs.mpd")
        self.assertEqual([o.result.verdict for o in report.outcomes if o.text.startswith("verify equal")], [True, True])
        self.assertFalse(outcome(report, "equal R2 R6").result.verdict)

    def test_cycles(self):
        report = self.run_file(GOLDEN / "cycles.mpd")
        self.assertFalse(outcome(report, "cycle check W").result.verdict)
        degree = outcome(report, "degree").result.witnesses
        self.assertEqual(degree["degree"], 1)
        self.assertEqual(degree["image"], "<s - 1>")

    def test_false_verify(self):
        text = "ring R = Q[x]; divisor D1 on R = x; divisor D2 on R = x^2; verify divisor geq D1 D2;"
        report = run(parse(text))
        self.assertEqual(report.outcomes[0].result.verdict_text, "fail")
        self.assertEqual(report.exit_code, EXIT_VERIFY_FAILED)

    def test_bad_declaration_aborts(self):
        text = (LINES + "ring S = Q[s];\npair L {\n  chart { ring S; divisor s; }\n}\n"
                "ideal I = <x> in R;\ngroebner I;\nmorphism F : P -> L { t -> x; }\nadmissible F;\n")
        report = run(parse(text))
        self.assertEqual(len(report.outcomes), 1)
        self.assertEqual(report.failure.command, "morphism F : P -> L")
        self.assertEqual(report.failure.cause.dict()["type"], "SignatureMismatch")
        self.assertEqual(report.exit_code, EXIT_SCRIPT_ERROR)
        self.assertIn("aborted: morphism F : P -> L", render_text(report, timing=False))

    def test_monomial_order(self):
        text = "ring R = Q[x, y]; ideal I = <x + y^2> in R; groebner I;"
        grevlex = run(parse(text)).outcomes[0].result.witnesses["basis"]
        lex = run(parse(text), order="lex").outcomes[0].result.witnesses["basis"]
        self.assertEqual(grevlex, ["y^2 + x"])
        self.assertEqual(lex, ["x + y^2"])

    def test_text_report_is_byte_stable(self):
        first = render_text(self.run_file(GOLDEN / "cycles.mpd"))
        second = render_text(self.run_file(GOLDEN / "cycles.mpd"))
        self.assertIn("\n" + TIMING_RULE + "\n", first)
        self.assertEqual(canonical(first), canonical(second))
        self.assertEqual(canonical(first), render_text(self.run_file(GOLDEN / "cycles.mpd"), timing=False))

    def test_json_mirror(self):
        report = self.run_file(GOLDEN / "algebra.mpd")
        payload = json.loads(render_json(report))
        self.assertEqual(sorted(payload), ["commands", "exit_code", "failure"])
        self.assertEqual([c["verdict"] for c in payload["commands"]],
                         [o.result.verdict_text for o in report.outcomes])
        self.assertEqual(payload["commands"][0]["command"], "verify member x^2 in I")
        self.assertIsNone(payload["failure"])
        self.assertEqual(payload["exit_code"], EXIT_OK)


class TestConfig(unittest.TestCase):

    def test_example_file(self):
        loaded = Config()
        loaded.init_config("configs/config_example.toml")
        self.assertEqual(loaded.tag, "example")
        self.assertEqual(loaded.order, "grevlex")
        self.assertTrue(loaded.oracle.enabled)
        self.assertEqual(loaded.oracle.max_columns, 4000)
        self.assertTrue(loaded.log_path.endswith(str(Path("example") / "log.txt")))


class TestMain(unittest.TestCase):

    def setUp(self):
        from main import main
        self.main = main
        self.json_report, self.timing_footer = config.json_report, config.timing_footer

    def tearDown(self):
        config.json_report, config.timing_footer = self.json_report, self.timing_footer

    def call(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = self.main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_text_report(self):
        code, out, _ = self.call(str(AISOC), "--no-timing", "--log-level", "OFF")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("[1] verify aisoc Q[x] x\nverdict: pass\n"))
        self.assertNotIn(TIMING_RULE, out)

    def test_json_report(self):
        code, out, _ = self.call(str(AISOC), "--json", "--log-level", "OFF")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)["commands"]), 3)

    def test_parse_error(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "broken.mpd"
            path.write_text("ring R = Q[x]\n", encoding="utf-8")
            code, out, _ = self.call(str(path), "--log-level", "OFF")
        self.assertEqual(code, EXIT_SCRIPT_ERROR)
        self.assertEqual(out, "")

    def test_unreadable_script(self):
        with tempfile.TemporaryDirectory() as directory:
            missing = Path(directory) / "missing.mpd"
            code, out, _ = self.call(str(missing), "--log-level", "OFF")
            self.assertEqual(code, EXIT_SCRIPT_ERROR)
            self.assertEqual(out, "")
            binary = Path(directory) / "binary.mpd"
            binary.write_bytes(b"ring R = Q[x];\n\xff\xfe\n")
            code, out, _ = self.call(str(binary), "--log-level", "OFF")
            self.assertEqual(code, EXIT_SCRIPT_ERROR)
            self.assertEqual(out, "")


if __name__ == "__main__":
    unittest.main()
