"""Canonical printing of scripts: `parse(print_script(s)) == s` and printing a golden file reproduces it."""

from typing import List

from src.cli.ast import (
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
    Statement,
)
from src.exactalg.expr import format_expr

INDENT = "  "


def print_ideal(ideal: IdealLit) -> str:
    return "<" + ", ".join(format_expr(g) for g in ideal.generators) + ">"


def print_ring(ring: RingExpr) -> str:
    text = "Q"
    if ring.variables is not None:
        text += "[" + ", ".join(ring.variables) + "]"
    if ring.quotient is not None:
        text += " / " + print_ideal(ring.quotient)
    return text


def _block(items: List[str]) -> str:
    return "{ " + " ".join(items) + " }" if items else "{ }"


def _assignments(assignments, arrow: str = " -> ") -> str:
    return _block([f"{a.name}{arrow}{format_expr(a.expr)};" for a in assignments])


def _chart(chart: ChartDecl) -> str:
    items = [f"ring {chart.ring};"]
    if chart.ideal is not None:
        ideal = print_ideal(chart.ideal) if isinstance(chart.ideal, IdealLit) else str(chart.ideal)
        items.append(f"ideal {ideal};")
    items.append(f"divisor {format_expr(chart.divisor)};")
    return "chart " + _block(items)


def _nested(header: str, lines: List[str]) -> str:
    if not lines:
        return header + " { }"
    return "\n".join([header + " {"] + [INDENT + line for line in lines] + ["}"])


def _proper(proper: ProperClause) -> str:
    if proper.kind == "finite":
        return " proper finite " + _assignments(proper.witnesses, arrow=" : ")
    return f" proper {proper.kind}"


def _component(component: ComponentDecl) -> str:
    text = f"component {print_ideal(component.ideal)} mult {component.multiplicity}"
    if component.charts is not None:
        text += f" charts {component.charts[0]}, {component.charts[1]}"
    text += f" normal {component.normal} " + _assignments(component.images)
    if component.proper is not None:
        text += _proper(component.proper)
    return text


def _fin_member(member: FinMember) -> str:
    return f"{member.morphism} " + _assignments(member.witnesses, arrow=" : ")


def print_command(command: Command) -> str:
    """The command as written after the optional `verify`, without the semicolon."""
    name, args = command.name, command.args
    if name == "member":
        return f"member {format_expr(args[0])} in {args[1]}"
    if name == "nzd":
        return f"nzd {args[0]} {format_expr(args[1])}"
    if name == "cover zar":
        return f"cover zar {args[0]} by {print_ideal(args[1])}"
    if name == "cover fin":
        return f"cover fin {args[0]} by " + ", ".join(_fin_member(m) for m in args[1])
    if name == "product":
        kind, target, first, second, base = args
        return f"product {kind} {target} = {first}, {second} over {base}"
    if name in ("compare box-times", "fill"):
        return f"{name} {args[0]}, {args[1]} over {args[2]}"
    if name == "aisoc":
        ring = print_ring(args[0]) if isinstance(args[0], RingExpr) else args[0]
        return f"aisoc {ring} {format_expr(args[1])}"
    if name == "tensor-fiber":
        text = f"tensor-fiber {args[0]} {args[1]} {args[2]}"
        return text + (f" over {args[3]}" if args[3] is not None else "")
    if name in ("compose", "cycle graph"):
        *operands, alias = args
        text = " ".join([name] + list(operands))
        return text + (f" as {alias}" if alias is not None else "")
    if name == "degree":
        point, ring, over, base = args
        return f"degree {print_ideal(point)} in {ring} over {print_ideal(over)} in {base}"
    return " ".join([name] + [str(a) for a in args])


def print_statement(statement: Statement) -> str:
    if isinstance(statement, Command):
        return ("verify " if statement.verify else "") + print_command(statement) + ";"
    if isinstance(statement, RingDecl):
        return f"ring {statement.name} = {print_ring(statement.ring)};"
    if isinstance(statement, IdealDecl):
        return f"ideal {statement.name} = {print_ideal(statement.ideal)} in {statement.ring};"
    if isinstance(statement, PairDecl):
        return _nested(f"pair {statement.name}", [_chart(c) for c in statement.charts])
    if isinstance(statement, MorphismDecl):
        header = f"morphism {statement.name} : {statement.source} -> {statement.target}"
        if statement.charts is None:
            return header + " " + _assignments(statement.assignments)
        return _nested(header, [f"chart {c.source} -> {c.target} " + _assignments(c.assignments)
                                for c in statement.charts])
    if isinstance(statement, SigmaDecl):
        ideals = ", ".join(print_ideal(i) for i in statement.ideals)
        return f"sigma {statement.name} : {statement.source} -> {statement.target} {statement.kind} {ideals};"
    if isinstance(statement, DivisorDecl):
        return f"divisor {statement.name} on {statement.ring} = {format_expr(statement.expr)};"
    if isinstance(statement, RoofDecl):
        return (f"roof {statement.name} : {statement.source} => {statement.target} "
                f"{{ sigma {statement.sigma}; map {statement.morphism}; }}")
    if isinstance(statement, RoofAlias):
        return f"roof {statement.name} = {statement.morphism};"
    if isinstance(statement, CorrespondenceDecl):
        header = f"correspondence {statement.name} : {statement.source} -> {statement.target}"
        return _nested(header, [_component(c) for c in statement.components])
    raise TypeError(f"cannot print {type(statement).__name__}")


def print_script(script: Script) -> str:
    return "".join(print_statement(s) + "\n" for s in script.statements)
