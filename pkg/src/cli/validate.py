"""Static checks run before any algebra: unique names, resolvable references of the right kind, `verify` placement."""

from typing import Dict, Optional

from src.cli.ast import (
    Command,
    CorrespondenceDecl,
    DivisorDecl,
    IdealDecl,
    MorphismDecl,
    PairDecl,
    RingDecl,
    RingExpr,
    RoofAlias,
    RoofDecl,
    Script,
    SigmaDecl,
    Statement,
)
from src.exception import ScriptValidationError
from src.registry import REGISTED_COMMANDS


class Scope:
    """Name table of one script; every declared object has exactly one kind."""

    def __init__(self):
        self.kinds: Dict[str, str] = {}

    def declare(self, name: str, kind: str, line: int) -> None:
        if name in self.kinds:
            raise ScriptValidationError(f"line {line}: {name!r} is already declared as a {self.kinds[name]}")
        self.kinds[name] = kind

    def expect(self, name: Optional[str], kinds, line: int) -> None:
        if name is None:
            return
        kinds = (kinds,) if isinstance(kinds, str) else tuple(kinds)
        found = self.kinds.get(name)
        if found is None:
            raise ScriptValidationError(f"line {line}: {name!r} is not declared")
        if found not in kinds:
            raise ScriptValidationError(f"line {line}: {name!r} is a {found}, expected a {' or '.join(kinds)}")


def _declaration(scope: Scope, statement: Statement) -> None:
    line = statement.line
    if isinstance(statement, RingDecl):
        scope.declare(statement.name, "ring", line)
    elif isinstance(statement, IdealDecl):
        scope.expect(statement.ring, "ring", line)
        scope.declare(statement.name, "ideal", line)
    elif isinstance(statement, PairDecl):
        for chart in statement.charts:
            scope.expect(chart.ring, "ring", line)
            if isinstance(chart.ideal, str):
                scope.expect(chart.ideal, "ideal", line)
            elif isinstance(chart.ideal, int) and chart.ideal != 0:
                raise ScriptValidationError(f"line {line}: the only integer chart ideal is 0")
        scope.declare(statement.name, "pair", line)
    elif isinstance(statement, MorphismDecl):
        scope.expect(statement.source, "pair", line)
        scope.expect(statement.target, "pair", line)
        if statement.charts is not None:
            sources = [c.source for c in statement.charts]
            if len(set(sources)) != len(sources):
                raise ScriptValidationError(f"line {line}: source chart assigned twice in {statement.name}")
        scope.declare(statement.name, "morphism", line)
    elif isinstance(statement, SigmaDecl):
        scope.expect(statement.target, "pair", line)
        scope.declare(statement.name, "sigma", line)
        scope.declare(statement.source, "pair", line)
    elif isinstance(statement, DivisorDecl):
        scope.expect(statement.ring, "ring", line)
        scope.declare(statement.name, "divisor", line)
    elif isinstance(statement, RoofDecl):
        scope.expect(statement.source, "pair", line)
        scope.expect(statement.target, "pair", line)
        scope.expect(statement.sigma, "sigma", line)
        scope.expect(statement.morphism, "morphism", line)
        scope.declare(statement.name, "roof", line)
    elif isinstance(statement, RoofAlias):
        scope.expect(statement.morphism, "morphism", line)
        scope.declare(statement.name, "roof", line)
    elif isinstance(statement, CorrespondenceDecl):
        scope.expect(statement.source, "pair", line)
        scope.expect(statement.target, "pair", line)
        for component in statement.components:
            scope.expect(component.normal, "ring", line)
            if component.multiplicity == 0:
                raise ScriptValidationError(f"line {line}: a component of {statement.name} has multiplicity 0")
        scope.declare(statement.name, "correspondence", line)


def _command(scope: Scope, command: Command) -> None:
    line = command.line
    command_cls = REGISTED_COMMANDS.get(command.name)
    if command_cls is None:
        raise ScriptValidationError(f"line {line}: unknown command {command.name!r}")
    if command.verify and not command_cls.verdict_bearing:
        raise ScriptValidationError(f"line {line}: `{command.name}` has no verdict to verify")
    declared = []
    for value, kind in zip(command.args, command_cls.operands):
        if kind is None or value is None or isinstance(value, RingExpr):
            continue
        if kind.startswith("new "):
            declared.append((value, command_cls.declared_kind(command)))
        elif kind == "fin members":
            for member in value:
                scope.expect(member.morphism, "morphism", line)
        else:
            scope.expect(value, kind.split("|"), line)
    for name, kind in declared:
        scope.declare(name, kind, line)


def validate(script: Script) -> Scope:
    """Raise ScriptValidationError on the first bad statement; returns the filled name table."""
    scope = Scope()
    for statement in script.statements:
        if isinstance(statement, Command):
            _command(scope, statement)
        else:
            _declaration(scope, statement)
    return scope
