"""The script commands, one registered class per keyword."""

from typing import Any, Dict, List

from src.affine import make_ring_map
from src.cli.ast import FinMember
from src.cli.command import CommandResult, ScriptCommand
from src.cli.environment import Environment, Failed, ideal_in
from src.config import config
from src.cycles import (
    check_correspondence,
    ddh_check,
    divisor_geq,
    graph_cycle,
    image_point,
    pushforward_degree,
    rephrasing_check,
)
from src.exception import (
    ConstructionInvariantFailed,
    CycleError,
    IntersectionNotCartier,
    ModulusError,
    NotAdmissible,
    SignatureMismatch,
    SquareDoesNotCommute,
)
from src.exactalg import Ideal, evaluate, format_expr, macaulay_member
from src.logger import logger
from src.modpair import (
    certify_sigma,
    check_cover,
    compose,
    equal_on_interior,
    finite_member,
    principal_open_member,
    same_pair,
)
from src.msch import compose_roofs, roofs_equal
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
from src.registry import register_command


def _morphism_report(env: Environment, morphism) -> List[Dict[str, str]]:
    return morphism.describe(env.order)


# ---------- ideals and rings ----------
@register_command("groebner")
class GroebnerCommand(ScriptCommand):
    name = "groebner"
    description = "Reduced Gröbner basis of a declared ideal in the active order."
    operands = ("ideal",)

    def forward(self, env: Environment, command) -> CommandResult:
        I = env.ideal(command.args[0])
        basis = I.groebner_basis(env.order)
        logger.debug(f"groebner {command.args[0]}: {len(basis)} elements")
        return CommandResult(witnesses={"basis": [env.fmt(g) for g in basis]})


@register_command("member")
class MemberCommand(ScriptCommand):
    name = "member"
    description = "Ideal membership with cofactors, cross-checked by the Macaulay-matrix oracle."
    operands = (None, "ideal")
    verdict_bearing = True

    @staticmethod
    def _oracle(f, I: Ideal, cofactors) -> str:
        if not config.oracle.enabled:
            return "off"
        degree = None
        if cofactors is not None:
            degree = max([c.total_degree + g.total_degree for c, g in zip(cofactors, I.generators)
                          if not c.is_zero and not g.is_zero], default=0)
        try:
            agrees = macaulay_member(f, I, degree=degree, slack=config.max_degree,
                                     max_columns=config.oracle.max_columns) == (cofactors is not None)
        except ValueError as error:
            logger.debug(f"oracle skipped: {error}")
            return "skipped"
        return "agrees" if agrees else "disagrees"

    def forward(self, env: Environment, command) -> CommandResult:
        expr, name = command.args
        I = env.ideal(name)
        f = evaluate(expr, I.ring)
        cofactors = I.membership_with_witness(f)
        witnesses: Dict[str, Any] = {"element": env.fmt(f), "oracle": self._oracle(f, I, cofactors)}
        if cofactors is None:
            witnesses["remainder"] = env.fmt(I.normal_form(f, env.order))
        else:
            witnesses["cofactors"] = [env.fmt(c) for c in cofactors]
        return CommandResult(verdict=cofactors is not None, witnesses=witnesses)


@register_command("nzd")
class NzdCommand(ScriptCommand):
    name = "nzd"
    description = "Is the element a nonzerodivisor of the ring? Reports its annihilator otherwise."
    operands = ("ring", None)
    verdict_bearing = True

    def forward(self, env: Environment, command) -> CommandResult:
        R = env.ring(command.args[0])
        f = evaluate(command.args[1], R.variables)
        verdict = R.is_nonzerodivisor(f)
        witnesses: Dict[str, Any] = {"element": env.fmt(R.reduce(f, env.order))}
        if not verdict:
            annihilator = [g for g in R.ideal.colon(f).groebner_basis(env.order) if not R.contains(g)]
            witnesses["annihilator"] = [env.fmt(g) for g in annihilator]
        return CommandResult(verdict=verdict, witnesses=witnesses)


@register_command("dim")
class DimCommand(ScriptCommand):
    name = "dim"
    description = "Q-dimension of the quotient by a declared ideal, with its standard monomials."
    operands = ("ideal",)

    def forward(self, env: Environment, command) -> CommandResult:
        I = env.ideal(command.args[0])
        dimension = I.vspace_dim()
        if dimension is None:
            return CommandResult(witnesses={"dimension": "infinite"})
        monomials = I.standard_monomials()
        return CommandResult(witnesses={"dimension": dimension, "monomials": [env.fmt(m) for m in monomials]})


# ---------- pairs and morphisms ----------
@register_command("interior")
class InteriorCommand(ScriptCommand):
    name = "interior"
    description = "The interior of every chart as a localization."
    operands = ("pair",)

    def forward(self, env: Environment, command) -> CommandResult:
        pair = env.pair(command.args[0])
        charts = []
        for index, chart in enumerate(pair.charts):
            local = chart.interior
            charts.append({
                "chart": index,
                "ring": local.presentation.to_str(env.order),
                "inverse": f"{local.unit} = 1/({env.fmt(chart.presentation.reduce(chart.divisor, env.order))})",
                "empty": local.presentation.is_empty(),
            })
        logger.log_table(f"interior of {command.args[0]}", ["chart", "ring", "inverse", "empty"],
                         [[c["chart"], c["ring"], c["inverse"], c["empty"]] for c in charts])
        return CommandResult(witnesses={"charts": charts})


@register_command("admissible")
class AdmissibleCommand(ScriptCommand):
    name = "admissible"
    description = "g_X in <f*(g_Y)> + I on every source chart."
    operands = ("morphism",)
    verdict_bearing = True

    def forward(self, env: Environment, command) -> CommandResult:
        f = env.morphism(command.args[0])
        witnesses: Dict[str, Any] = {"charts": _morphism_report(env, f)}
        if f.failed_chart() is not None:
            witnesses["failed chart"] = f.failed_chart()
        return CommandResult(verdict=f.admissible, witnesses=witnesses)


@register_command("minimal")
class MinimalCommand(ScriptCommand):
    name = "minimal"
    description = "Admissible with equal divisors: the pulled-back divisor also divides g_X."
    operands = ("morphism",)
    verdict_bearing = True

    def forward(self, env: Environment, command) -> CommandResult:
        f = env.morphism(command.args[0])
        reverse = [env.fmt(v.minimal_cofactor) if v.minimal else "none" for v in f.verdicts]
        return CommandResult(verdict=f.minimal,
                             witnesses={"charts": _morphism_report(env, f), "reverse cofactors": reverse})


@register_command("certified")
class CertifiedCommand(ScriptCommand):
    name = "certified"
    description = "Re-check the certificate of a declared abstract admissible blow-up."
    operands = ("sigma",)
    verdict_bearing = True
    soft_errors = (ModulusError,)

    def forward(self, env: Environment, command) -> CommandResult:
        sigma = env.sigma(command.args[0], allow_failed=True)
        if isinstance(sigma, Failed):
            return CommandResult(verdict=False, error=sigma.error.dict())
        certified = certify_sigma(sigma.morphism, sigma.certificate)
        return CommandResult(verdict=True, witnesses=certified.describe())


# ---------- covers ----------
@register_command("cover zar")
class ZariskiCoverCommand(ScriptCommand):
    name = "cover zar"
    description = "Principal opens D(f_i) of chart 0 cover the pair."
    operands = ("pair", None)
    verdict_bearing = True
    soft_errors = (ModulusError,)

    def forward(self, env: Environment, command) -> CommandResult:
        pair = env.pair(command.args[0])
        elements = ideal_in(pair[0].presentation.variables, command.args[1])
        members = [principal_open_member(pair, f) for f in elements]
        verdict = check_cover("zar", members, pair)
        return CommandResult(verdict=True, witnesses={"members": verdict.members, **verdict.witnesses})


@register_command("cover fin")
class FiniteCoverCommand(ScriptCommand):
    name = "cover fin"
    description = "Minimal morphisms with monic witnesses jointly cover the pair."
    operands = ("pair", "fin members")
    verdict_bearing = True
    soft_errors = (ModulusError,)

    def forward(self, env: Environment, command) -> CommandResult:
        pair = env.pair(command.args[0])
        members = []
        member: FinMember
        for member in command.args[1]:
            witnesses = {w.name: format_expr(w.expr) for w in member.witnesses}
            members.append(finite_member(env.morphism(member.morphism), witnesses))
        verdict = check_cover("fin", members, pair)
        return CommandResult(verdict=True, witnesses={"members": verdict.members, **verdict.witnesses})


# ---------- products ----------
@register_command("product")
class ProductCommand(ScriptCommand):
    name = "product"
    description = "Ambient, box or categorical fibre product of two morphisms over a common base."
    operands = (None, "new product", "morphism", "morphism", "pair")
    verdict_bearing = True
    soft_errors = (ConstructionInvariantFailed,)

    @classmethod
    def declared_kind(cls, command) -> str:
        return "box product" if command.args[0] == "box" else "product"

    def forward(self, env: Environment, command) -> CommandResult:
        kind, target, first, second, base = command.args
        f, g = env.morphism(first), env.morphism(second)
        if not same_pair(f.target, env.pair(base)):
            raise SignatureMismatch(f"{first} does not map to {base}")
        if kind == "box":
            box = box_product(f, g)
            env.bind(target, "box product", box)
            return CommandResult(verdict=True, witnesses={"charts": box.describe(env.order)})
        result = ambient_product(f, g)
        env.bind(target, "product", result)
        witnesses = result.describe(env.order)
        if kind == "ambient":
            witnesses["E"] = exceptional_check(result)
            witnesses["residuals disjoint"] = key_lemma_check(result).disjoint
            witnesses["interior"] = [{**entry, "block": list(entry["block"])} for entry in interior_comparison(result)]
            return CommandResult(verdict=True, witnesses=witnesses)
        commutes = equal_on_interior(compose(result.proj_x, f), compose(result.proj_t, g))
        witnesses["projections admissible"] = [result.proj_x.admissible, result.proj_t.admissible]
        witnesses["square commutes"] = commutes
        verdict = commutes and result.proj_x.admissible and result.proj_t.admissible
        return CommandResult(verdict=verdict, witnesses=witnesses)


@register_command("compare box-times")
class BoxTimesCommand(ScriptCommand):
    name = "compare box-times"
    description = "Blow the box product up to the ambient product and check the comparison map."
    operands = ("morphism", "morphism", "pair")
    verdict_bearing = True
    soft_errors = (ConstructionInvariantFailed, ModulusError)

    def forward(self, env: Environment, command) -> CommandResult:
        first, second, base = command.args
        f, g = env.morphism(first), env.morphism(second)
        if not same_pair(f.target, env.pair(base)):
            raise SignatureMismatch(f"{first} does not map to {base}")
        roof = box_to_times(f, g)
        return CommandResult(verdict=roof.morphism.admissible, witnesses={
            "sigma": roof.sigma.describe(),
            "map": _morphism_report(env, roof.morphism),
            "cofactors": roof.witnesses(),
        })


@register_command("fill")
class FillCommand(ScriptCommand):
    name = "fill"
    description = "Factor two legs through a declared fibre product and compare both lifts."
    operands = ("morphism", "morphism", "product")
    verdict_bearing = True
    soft_errors = (SquareDoesNotCommute,)

    def forward(self, env: Environment, command) -> CommandResult:
        first, second, name = command.args
        product = env.product(name)
        a, b = env.morphism(first), env.morphism(second)
        fill = fibre_fill_in(product, a, b, prefer=0)
        other = fibre_fill_in(product, a, b, prefer=1)
        commutes = fill.commutes(product, a, b)
        unique = equal_on_interior(fill.morphism, other.morphism)
        witnesses: Dict[str, Any] = {
            "map": _morphism_report(env, fill.morphism),
            "commutes": commutes,
            "unique": unique,
        }
        if fill.sigma is not None:
            witnesses["sigma"] = fill.sigma.describe()
        return CommandResult(verdict=commutes and unique, witnesses=witnesses)


@register_command("aisoc")
class AisoCCommand(ScriptCommand):
    name = "aisoc"
    description = "Chart-by-chart comparison of the two subring presentations of a divisor's blow-up."
    operands = ("ring", None)
    verdict_bearing = True

    def forward(self, env: Environment, command) -> CommandResult:
        R = env.ring(command.args[0])
        report = build_AisoC(R, evaluate(command.args[1], R.variables))
        return CommandResult(verdict=report.passed, witnesses=report.describe(env.order))


@register_command("tensor-fiber")
class TensorFiberCommand(ScriptCommand):
    name = "tensor-fiber"
    description = "Box product of a fibre product against a third factor, chart by chart."
    operands = ("morphism", "morphism", "morphism", "morphism")
    verdict_bearing = True
    soft_errors = (ConstructionInvariantFailed,)

    def forward(self, env: Environment, command) -> CommandResult:
        f, g, h, base = command.args
        report = tensor_fiber_check(env.morphism(f), env.morphism(g), env.morphism(h),
                                    env.morphism(base) if base is not None else None)
        return CommandResult(verdict=report.passed, witnesses=report.describe())


# ---------- roofs ----------
@register_command("compose")
class ComposeCommand(ScriptCommand):
    name = "compose"
    description = "Compose two roofs (first, then second) through an Ore square."
    operands = ("roof", "roof", "new roof")

    def forward(self, env: Environment, command) -> CommandResult:
        first, second, alias = command.args
        roof = compose_roofs(env.roof(first), env.roof(second))
        if alias is not None:
            env.bind(alias, "roof", roof)
        return CommandResult(witnesses=roof.describe(env.order))


@register_command("equal")
class EqualCommand(ScriptCommand):
    name = "equal"
    description = "Equality of roofs over the interior of a common refinement."
    operands = ("roof", "roof")
    verdict_bearing = True

    def forward(self, env: Environment, command) -> CommandResult:
        first, second = (env.roof(name) for name in command.args)
        return CommandResult(verdict=roofs_equal(first, second), witnesses={
            "apexes": [len(first.apex), len(second.apex)],
        })


# ---------- divisors and cycles ----------
@register_command("divisor geq")
class DivisorGeqCommand(ScriptCommand):
    name = "divisor geq"
    description = "D1 >= D2, witnessed by d1 = c * d2."
    operands = ("divisor", "divisor")
    verdict_bearing = True

    def forward(self, env: Environment, command) -> CommandResult:
        first, second = (env.divisor(name) for name in command.args)
        comparison = divisor_geq(first, second)
        witnesses = {"D1": first.to_str(env.order), "D2": second.to_str(env.order)}
        if comparison.cofactor is not None:
            witnesses["cofactor"] = env.fmt(first.presentation.reduce(comparison.cofactor, env.order))
        return CommandResult(verdict=comparison.holds, witnesses=witnesses)


@register_command("divisor rephrase")
class DivisorRephraseCommand(ScriptCommand):
    name = "divisor rephrase"
    description = "D1 >= D2 exactly when the intersection E equals D2."
    operands = ("divisor", "divisor")
    verdict_bearing = True
    soft_errors = (IntersectionNotCartier,)

    def forward(self, env: Environment, command) -> CommandResult:
        first, second = (env.divisor(name) for name in command.args)
        report = rephrasing_check(first, second)
        return CommandResult(verdict=report.equivalent, witnesses=report.describe(env.order))


@register_command("divisor ddh")
class DivisorDdhCommand(ScriptCommand):
    name = "divisor ddh"
    description = "(D1 + H) x (D2 + H) = E + H as an ideal identity."
    operands = ("divisor", "divisor", "divisor")
    verdict_bearing = True
    soft_errors = (IntersectionNotCartier,)

    def forward(self, env: Environment, command) -> CommandResult:
        first, second, extra = (env.divisor(name) for name in command.args)
        report = ddh_check(first, second, extra)
        return CommandResult(verdict=report.holds, witnesses=report.describe(env.order))


@register_command("cycle check")
class CycleCheckCommand(ScriptCommand):
    name = "cycle check"
    description = "Properness certificates and the modulus condition of every component."
    operands = ("correspondence",)
    verdict_bearing = True
    soft_errors = (CycleError,)

    def forward(self, env: Environment, command) -> CommandResult:
        declared = env.correspondence(command.args[0])
        checked = check_correspondence(declared.source, declared.target, declared.components)
        return CommandResult(verdict=checked.passed, witnesses={"components": checked.describe(env.order)})


@register_command("cycle graph")
class CycleGraphCommand(ScriptCommand):
    name = "cycle graph"
    description = "The graph of an admissible morphism as a correspondence with modulus."
    operands = ("morphism", "new correspondence")
    verdict_bearing = True
    soft_errors = (NotAdmissible,)

    def forward(self, env: Environment, command) -> CommandResult:
        name, alias = command.args
        correspondence = graph_cycle(env.morphism(name))
        if alias is not None:
            env.bind(alias, "correspondence", correspondence)
        return CommandResult(verdict=correspondence.passed,
                             witnesses={"components": correspondence.describe(env.order)})


@register_command("degree")
class DegreeCommand(ScriptCommand):
    name = "degree"
    description = "Residue degree of a closed point over its image under the inclusion of variables."
    operands = (None, "ring", None, "ring")

    def forward(self, env: Environment, command) -> CommandResult:
        point, ring, over, base = command.args
        R, S = env.ring(ring), env.ring(base)
        missing = [v for v in S.variables if v not in R.variables]
        if missing:
            raise SignatureMismatch(f"{ring} has no variable {', '.join(missing)}")
        phi = make_ring_map(S, R, [R.var(v) for v in S.variables])
        z = Ideal(R.variables, ideal_in(R.variables, point))
        p = Ideal(S.variables, ideal_in(S.variables, over))
        degree = pushforward_degree(z, phi, over=p)
        image = image_point(z, phi)
        return CommandResult(witnesses={
            "degree": degree,
            "image": "<" + ", ".join(env.fmt(g) for g in image.groebner_basis(env.order)) + ">",
        })
