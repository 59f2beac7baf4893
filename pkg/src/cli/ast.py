"""Syntax tree of a modulus-pair script. Source lines are kept for diagnostics but ignored by equality."""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from src.exactalg.expr import Expr


@dataclass(frozen=True)
class IdealLit:
    generators: Tuple[Expr, ...] = ()


@dataclass(frozen=True)
class RingExpr:
    variables: Optional[Tuple[str, ...]] = None
    quotient: Optional[IdealLit] = None


@dataclass(frozen=True)
class Assignment:
    name: str
    expr: Expr


@dataclass(frozen=True)
class RingDecl:
    name: str
    ring: RingExpr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ideal: IdealLit
    ring: str
    line: int = field(default=0, compare=False)


# chart ideals are a literal, a declared ideal name, or the integer 0
ChartIdeal = Union[IdealLit, str, int]


@dataclass(frozen=True)
class ChartDecl:
    ring: str
    ideal: Optional[ChartIdeal]
    divisor: Expr


@dataclass(frozen=True)
class PairDecl:
    name: str
    charts: Tuple[ChartDecl, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ChartAssign:
    source: int
    target: int
    assignments: Tuple[Assignment, ...]


@dataclass(frozen=True)
class MorphismDecl:
    """Either one assignment block for every source chart (into chart 0) or explicit chart blocks."""

    name: str
    source: str
    target: str
    assignments: Optional[Tuple[Assignment, ...]] = None
    charts: Optional[Tuple[ChartAssign, ...]] = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SigmaDecl:
    name: str
    source: str
    target: str
    kind: str
    ideals: Tuple[IdealLit, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class DivisorDecl:
    name: str
    ring: str
    expr: Expr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RoofDecl:
    name: str
    source: str
    target: str
    sigma: str
    morphism: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RoofAlias:
    name: str
    morphism: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ProperClause:
    kind: str
    witnesses: Tuple[Assignment, ...] = ()


@dataclass(frozen=True)
class ComponentDecl:
    ideal: IdealLit
    multiplicity: int
    charts: Optional[Tuple[int, int]]
    normal: str
    images: Tuple[Assignment, ...]
    proper: Optional[ProperClause] = None


@dataclass(frozen=True)
class CorrespondenceDecl:
    name: str
    source: str
    target: str
    components: Tuple[ComponentDecl, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class FinMember:
    morphism: str
    witnesses: Tuple[Assignment, ...]


@dataclass(frozen=True)
class Command:
    """A command keyword with its positional arguments, as the registry dispatches it."""

    name: str
    args: Tuple[object, ...]
    verify: bool = False
    line: int = field(default=0, compare=False)


Declaration = Union[RingDecl, IdealDecl, PairDecl, MorphismDecl, SigmaDecl, DivisorDecl,
                    RoofDecl, RoofAlias, CorrespondenceDecl]
Statement = Union[Declaration, Command]


@dataclass(frozen=True)
class Script:
    statements: Tuple[Statement, ...] = ()

    @property
    def commands(self) -> Tuple[Command, ...]:
        return tuple(s for s in self.statements if isinstance(s, Command))
