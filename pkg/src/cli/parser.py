"""Lark grammar and tree builder for modulus-pair scripts."""

from dataclasses import replace

from lark import Lark, v_args
from lark.exceptions import UnexpectedInput

from src.cli.ast import (
    Assignment,
    ChartAssign,
    ChartDecl,
    Command,
    ComponentDecl,
    CorrespondenceDecl,
    DivisorDecl,
    FinMember,
    IdealDecl,
    IdealLit,
    MorphismDecl,
    PairDecl,
    ProperClause,
    RingDecl,
    RingExpr,
    RoofAlias,
    RoofDecl,
    Script,
    SigmaDecl,
)
from src.exactalg.expr import COMMON_TERMINALS, EXPR_RULES, ExprBuilder, lark_error

SCRIPT_RULES = r"""
start: statement*

?statement: ring_decl
          | ideal_decl
          | pair_decl
          | morphism_decl
          | sigma_decl
          | divisor_decl
          | roof_decl
          | roof_alias
          | correspondence_decl
          | command ";"            -> plain_command
          | "verify" command ";"   -> verified_command

ring_decl: "ring" NAME "=" ring_expr ";"
ring_expr: "Q" [var_list] ["/" ideal_lit]
var_list: "[" NAME ("," NAME)* "]"
ideal_lit: "<" [expr_list] ">"
expr_list: expr ("," expr)*

ideal_decl: "ideal" NAME "=" ideal_lit "in" NAME ";"

pair_decl: "pair" NAME "{" chart_decl* "}"
chart_decl: "chart" "{" "ring" NAME ";" [chart_ideal] "divisor" expr ";" "}"
chart_ideal: "ideal" ideal_ref ";"
?ideal_ref: ideal_lit
          | NAME
          | INT

?morphism_decl: "morphism" NAME ":" NAME "->" NAME "{" assignment* "}"     -> morphism_single
              | "morphism" NAME ":" NAME "->" NAME "{" chart_assign+ "}"   -> morphism_charts
assignment: NAME "->" expr ";"
chart_assign: "chart" INT "->" INT "{" assignment* "}"

sigma_decl: "sigma" NAME ":" NAME "->" NAME sigma_kind ideal_lit ("," ideal_lit)* ";"
!sigma_kind: "blowup" | "components"

divisor_decl: "divisor" NAME "on" NAME "=" expr ";"

roof_decl: "roof" NAME ":" NAME "=>" NAME "{" "sigma" NAME ";" "map" NAME ";" "}"
roof_alias: "roof" NAME "=" NAME ";"

correspondence_decl: "correspondence" NAME ":" NAME "->" NAME "{" component* "}"
component: "component" ideal_lit "mult" multiplicity [chart_pair] "normal" NAME "{" assignment* "}" [proper]
?multiplicity: INT         -> positive
             | "-" INT     -> negative
chart_pair: "charts" INT "," INT
?proper: "proper" "graph"                      -> proper_graph
       | "proper" "asserted"                   -> proper_asserted
       | "proper" "finite" "{" witness* "}"    -> proper_finite
witness: NAME ":" expr ";"

command: "groebner" NAME                                        -> cmd_groebner
       | "member" expr "in" NAME                                -> cmd_member
       | "nzd" NAME expr                                        -> cmd_nzd
       | "dim" NAME                                             -> cmd_dim
       | "interior" NAME                                        -> cmd_interior
       | "admissible" NAME                                      -> cmd_admissible
       | "minimal" NAME                                         -> cmd_minimal
       | "certified" NAME                                       -> cmd_certified
       | "cover" "zar" NAME "by" ideal_lit                      -> cmd_cover_zar
       | "cover" "fin" NAME "by" fin_member ("," fin_member)*   -> cmd_cover_fin
       | "product" product_kind NAME "=" NAME "," NAME "over" NAME -> cmd_product
       | "compare" "box-times" NAME "," NAME "over" NAME        -> cmd_compare
       | "fill" NAME "," NAME "over" NAME                       -> cmd_fill
       | "aisoc" ring_ref expr                                  -> cmd_aisoc
       | "tensor-fiber" NAME NAME NAME ["over" NAME]            -> cmd_tensor_fiber
       | "compose" NAME NAME ["as" NAME]                        -> cmd_compose
       | "equal" NAME NAME                                      -> cmd_equal
       | "divisor" "geq" NAME NAME                              -> cmd_divisor_geq
       | "divisor" "rephrase" NAME NAME                         -> cmd_divisor_rephrase
       | "divisor" "ddh" NAME NAME NAME                         -> cmd_divisor_ddh
       | "cycle" "check" NAME                                   -> cmd_cycle_check
       | "cycle" "graph" NAME ["as" NAME]                       -> cmd_cycle_graph
       | "degree" ideal_lit "in" NAME "over" ideal_lit "in" NAME -> cmd_degree
!product_kind: "ambient" | "box" | "fibre"
fin_member: NAME "{" witness* "}"
?ring_ref: NAME
         | ring_expr
"""


def _names(items):
    return tuple(str(item) for item in items)


class ScriptBuilder(ExprBuilder):
    """Turns the parse tree into `src.cli.ast` nodes."""

    def start(self, statements):
        return Script(tuple(statements))

    # ---------- rings and ideals ----------
    def var_list(self, names):
        return _names(names)

    def expr_list(self, exprs):
        return tuple(exprs)

    @v_args(inline=True)
    def ideal_lit(self, exprs=None):
        return IdealLit(exprs or ())

    @v_args(inline=True)
    def ring_expr(self, variables, quotient):
        return RingExpr(variables, quotient)

    @v_args(meta=True, inline=True)
    def ring_decl(self, meta, name, ring):
        return RingDecl(str(name), ring, meta.line)

    @v_args(meta=True, inline=True)
    def ideal_decl(self, meta, name, ideal, ring):
        return IdealDecl(str(name), ideal, str(ring), meta.line)

    # ---------- pairs and morphisms ----------
    @v_args(inline=True)
    def chart_ideal(self, ref):
        if isinstance(ref, IdealLit):
            return ref
        if ref.type == "INT":
            return int(ref)
        return str(ref)

    @v_args(inline=True)
    def chart_decl(self, ring, ideal, divisor):
        return ChartDecl(str(ring), ideal, divisor)

    @v_args(meta=True)
    def pair_decl(self, meta, children):
        name, *charts = children
        return PairDecl(str(name), tuple(charts), meta.line)

    @v_args(inline=True)
    def assignment(self, name, expr):
        return Assignment(str(name), expr)

    witness = assignment

    @v_args(inline=True)
    def chart_assign(self, source, target, *assignments):
        return ChartAssign(int(source), int(target), tuple(assignments))

    @v_args(meta=True)
    def morphism_single(self, meta, children):
        name, source, target, *assignments = children
        return MorphismDecl(str(name), str(source), str(target), assignments=tuple(assignments), line=meta.line)

    @v_args(meta=True)
    def morphism_charts(self, meta, children):
        name, source, target, *charts = children
        return MorphismDecl(str(name), str(source), str(target), charts=tuple(charts), line=meta.line)

    @v_args(inline=True)
    def sigma_kind(self, token):
        return str(token)

    @v_args(meta=True)
    def sigma_decl(self, meta, children):
        name, source, target, kind, *ideals = children
        return SigmaDecl(str(name), str(source), str(target), kind, tuple(ideals), meta.line)

    @v_args(meta=True, inline=True)
    def divisor_decl(self, meta, name, ring, expr):
        return DivisorDecl(str(name), str(ring), expr, meta.line)

    @v_args(meta=True, inline=True)
    def roof_decl(self, meta, name, source, target, sigma, morphism):
        return RoofDecl(str(name), str(source), str(target), str(sigma), str(morphism), meta.line)

    @v_args(meta=True, inline=True)
    def roof_alias(self, meta, name, morphism):
        return RoofAlias(str(name), str(morphism), meta.line)

    # ---------- correspondences ----------
    @v_args(inline=True)
    def positive(self, token):
        return int(token)

    @v_args(inline=True)
    def negative(self, token):
        return -int(token)

    @v_args(inline=True)
    def chart_pair(self, source, target):
        return int(source), int(target)

    def proper_graph(self, _):
        return ProperClause("graph")

    def proper_asserted(self, _):
        return ProperClause("asserted")

    def proper_finite(self, witnesses):
        return ProperClause("finite", tuple(witnesses))

    def component(self, children):
        ideal, multiplicity, charts, normal, *rest = children
        proper = rest.pop()
        return ComponentDecl(ideal, multiplicity, charts, str(normal), tuple(rest), proper)

    @v_args(meta=True)
    def correspondence_decl(self, meta, children):
        name, source, target, *components = children
        return CorrespondenceDecl(str(name), str(source), str(target), tuple(components), meta.line)

    # ---------- commands ----------
    @v_args(meta=True, inline=True)
    def plain_command(self, meta, command):
        return replace(command, line=meta.line)

    @v_args(meta=True, inline=True)
    def verified_command(self, meta, command):
        return replace(command, verify=True, line=meta.line)

    @v_args(inline=True)
    def product_kind(self, token):
        return str(token)

    @v_args(inline=True)
    def fin_member(self, name, *witnesses):
        return FinMember(str(name), tuple(witnesses))

    def cmd_groebner(self, children):
        return Command("groebner", _names(children))

    @v_args(inline=True)
    def cmd_member(self, expr, ideal):
        return Command("member", (expr, str(ideal)))

    @v_args(inline=True)
    def cmd_nzd(self, ring, expr):
        return Command("nzd", (str(ring), expr))

    def cmd_dim(self, children):
        return Command("dim", _names(children))

    def cmd_interior(self, children):
        return Command("interior", _names(children))

    def cmd_admissible(self, children):
        return Command("admissible", _names(children))

    def cmd_minimal(self, children):
        return Command("minimal", _names(children))

    def cmd_certified(self, children):
        return Command("certified", _names(children))

    @v_args(inline=True)
    def cmd_cover_zar(self, pair, ideal):
        return Command("cover zar", (str(pair), ideal))

    @v_args(inline=True)
    def cmd_cover_fin(self, pair, *members):
        return Command("cover fin", (str(pair), tuple(members)))

    @v_args(inline=True)
    def cmd_product(self, kind, name, first, second, base):
        return Command("product", (kind,) + _names((name, first, second, base)))

    def cmd_compare(self, children):
        return Command("compare box-times", _names(children))

    def cmd_fill(self, children):
        return Command("fill", _names(children))

    @v_args(inline=True)
    def cmd_aisoc(self, ring, expr):
        return Command("aisoc", (ring if isinstance(ring, RingExpr) else str(ring), expr))

    @v_args(inline=True)
    def cmd_tensor_fiber(self, f, g, h, base):
        return Command("tensor-fiber", _names((f, g, h)) + (str(base) if base is not None else None,))

    @v_args(inline=True)
    def cmd_compose(self, first, second, name):
        return Command("compose", _names((first, second)) + (str(name) if name is not None else None,))

    def cmd_equal(self, children):
        return Command("equal", _names(children))

    def cmd_divisor_geq(self, children):
        return Command("divisor geq", _names(children))

    def cmd_divisor_rephrase(self, children):
        return Command("divisor rephrase", _names(children))

    def cmd_divisor_ddh(self, children):
        return Command("divisor ddh", _names(children))

    def cmd_cycle_check(self, children):
        return Command("cycle check", _names(children))

    @v_args(inline=True)
    def cmd_cycle_graph(self, morphism, name):
        return Command("cycle graph", (str(morphism), str(name) if name is not None else None))

    @v_args(inline=True)
    def cmd_degree(self, point, ring, over, base):
        return Command("degree", (point, str(ring), over, str(base)))


_SCRIPT_PARSER = Lark(SCRIPT_RULES + EXPR_RULES + COMMON_TERMINALS, parser="lalr",
                      lexer="contextual", propagate_positions=True, maybe_placeholders=True)


def parse(text: str) -> Script:
    """Parse a whole script; failures carry line, column and the expected tokens."""
    try:
        tree = _SCRIPT_PARSER.parse(text)
    except UnexpectedInput as exc:
        raise lark_error(exc, text) from None
    return ScriptBuilder().transform(tree)
