"""Evaluation of declarations into library objects, keyed by script name."""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple, Union

from src.affine import Presentation
from src.cli.ast import (
    Assignment,
    ChartDecl,
    ComponentDecl,
    CorrespondenceDecl,
    DivisorDecl,
    IdealDecl,
    IdealLit,
    MorphismDecl,
    PairDecl,
    RingDecl,
    RingExpr,
    RoofAlias,
    RoofDecl,
    SigmaDecl,
    Statement,
)
from src.cycles import (
    CycleComponent,
    LeftProperness,
    ModulusCorrespondence,
    Normalization,
    chart_product,
    make_divisor,
)
from src.exception import ModpairError, ModulusError, SignatureMismatch
from src.exactalg import Ideal, MonomialOrder, Poly, evaluate, format_expr
from src.logger import logger
from src.modpair import ModulusPair, ambient_morphism, decompose_interior, make_pair, same_pair, sigma_blowup
from src.msch import Roof


@dataclass
class Failed:
    """A declaration whose construction raised; using the name re-raises the error."""

    error: ModpairError


def ideal_in(ring: Sequence[str], ideal: IdealLit) -> List[Poly]:
    return [evaluate(g, ring) for g in ideal.generators]


def ring_from(ring: RingExpr) -> Presentation:
    variables = ring.variables or ()
    relations = ideal_in(variables, ring.quotient) if ring.quotient is not None else []
    return Presentation(variables, Ideal(variables, relations))


def _images(assignments: Sequence[Assignment], names: Sequence[str], ring: Sequence[str], what: str) -> List[Poly]:
    given = {a.name: a.expr for a in assignments}
    unknown = sorted(set(given) - set(names))
    if unknown:
        raise SignatureMismatch(f"{what}: {', '.join(unknown)} not among {', '.join(names) or 'no variables'}")
    missing = [name for name in names if name not in given]
    if missing:
        raise SignatureMismatch(f"{what}: no image for {', '.join(missing)}")
    return [evaluate(given[name], ring) for name in names]


class Environment:
    """Declared objects of a running script plus the active monomial order."""

    def __init__(self, order: Union[str, MonomialOrder] = "grevlex"):
        self.order: MonomialOrder = MonomialOrder.named(order) if isinstance(order, str) else order
        self.objects: Dict[str, Tuple[str, Any]] = {}

    # ---------- storage ----------
    def bind(self, name: str, kind: str, value: Any) -> None:
        self.objects[name] = (kind, value)

    def lookup(self, name: str, kind: str, allow_failed: bool = False) -> Any:
        found, value = self.objects[name]
        if isinstance(value, Failed) and not allow_failed:
            raise value.error
        if found != kind and not found.endswith(kind):
            raise SignatureMismatch(f"{name!r} is a {found}, not a {kind}")
        return value

    def ring(self, name: Union[str, RingExpr]) -> Presentation:
        if isinstance(name, RingExpr):
            return ring_from(name)
        return self.lookup(name, "ring")

    def ideal(self, name: str) -> Ideal:
        return self.lookup(name, "ideal")

    def pair(self, name: str) -> ModulusPair:
        return self.lookup(name, "pair")

    def morphism(self, name: str):
        return self.lookup(name, "morphism")

    def sigma(self, name: str, allow_failed: bool = False):
        return self.lookup(name, "sigma", allow_failed)

    def divisor(self, name: str):
        return self.lookup(name, "divisor")

    def roof(self, name: str) -> Roof:
        return self.lookup(name, "roof")

    def correspondence(self, name: str) -> ModulusCorrespondence:
        return self.lookup(name, "correspondence")

    def product(self, name: str):
        return self.lookup(name, "product")

    def fmt(self, p: Poly) -> str:
        return p.to_str(self.order)

    # ---------- declarations ----------
    def declare(self, statement: Statement) -> None:
        handler = getattr(self, "_" + type(statement).__name__)
        handler(statement)

    def _RingDecl(self, statement: RingDecl) -> None:
        self.bind(statement.name, "ring", ring_from(statement.ring))

    def _IdealDecl(self, statement: IdealDecl) -> None:
        R = self.ring(statement.ring)
        self.bind(statement.name, "ideal", R.ideal.with_generators(ideal_in(R.variables, statement.ideal)))

    def _chart(self, chart: ChartDecl) -> Tuple[Presentation, Poly]:
        R = self.ring(chart.ring)
        if isinstance(chart.ideal, IdealLit):
            R = R.with_relations(ideal_in(R.variables, chart.ideal))
        elif isinstance(chart.ideal, str):
            extra = self.ideal(chart.ideal)
            if extra.ring != R.variables:
                raise SignatureMismatch(f"ideal {chart.ideal} does not live on {chart.ring}")
            R = R.with_relations(extra.generators)
        return R, evaluate(chart.divisor, R.variables)

    def _PairDecl(self, statement: PairDecl) -> None:
        pair = make_pair([self._chart(chart) for chart in statement.charts])
        logger.debug(f"pair {statement.name} with {len(pair)} charts")
        self.bind(statement.name, "pair", pair)

    def _MorphismDecl(self, statement: MorphismDecl) -> None:
        X, Y = self.pair(statement.source), self.pair(statement.target)
        what = f"morphism {statement.name}"
        maps = []
        if statement.charts is None:
            if len(Y) != 1:
                raise SignatureMismatch(f"{what}: a multi-chart target needs explicit chart blocks")
            names = Y[0].presentation.variables
            for chart in X.charts:
                maps.append((0, _images(statement.assignments, names, chart.presentation.variables, what)))
        else:
            by_source = {c.source: c for c in statement.charts}
            if sorted(by_source) != list(range(len(X))):
                raise SignatureMismatch(f"{what}: chart blocks must cover source charts 0..{len(X) - 1}")
            for i, chart in enumerate(X.charts):
                block = by_source[i]
                if not 0 <= block.target < len(Y):
                    raise SignatureMismatch(f"{what}: target chart {block.target} does not exist")
                names = Y[block.target].presentation.variables
                maps.append((block.target, _images(block.assignments, names, chart.presentation.variables, what)))
        self.bind(statement.name, "morphism", ambient_morphism(X, Y, maps))

    def _SigmaDecl(self, statement: SigmaDecl) -> None:
        P = self.pair(statement.target)
        try:
            if statement.kind == "blowup":
                ideals = list(statement.ideals)
                if len(ideals) == 1:
                    ideals = ideals * len(P)
                if len(ideals) != len(P):
                    raise SignatureMismatch(f"sigma {statement.name}: {len(ideals)} centers for {len(P)} charts")
                centers = [ideal_in(chart.presentation.variables, ideal) for chart, ideal in zip(P.charts, ideals)]
                sigma = sigma_blowup(P, centers)
            else:
                variables = P[0].presentation.variables
                sigma = decompose_interior(P, *[Ideal(variables, ideal_in(variables, i)) for i in statement.ideals]).sigma
        except ModulusError as error:
            logger.debug(f"sigma {statement.name} is not certified: {error.message}")
            self.bind(statement.name, "sigma", Failed(error))
            self.bind(statement.source, "pair", Failed(error))
            return
        self.bind(statement.name, "sigma", sigma)
        self.bind(statement.source, "pair", sigma.source)

    def _DivisorDecl(self, statement: DivisorDecl) -> None:
        R = self.ring(statement.ring)
        self.bind(statement.name, "divisor", make_divisor(R, evaluate(statement.expr, R.variables)))

    def _RoofDecl(self, statement: RoofDecl) -> None:
        roof = Roof(self.sigma(statement.sigma), self.morphism(statement.morphism))
        if not same_pair(roof.source, self.pair(statement.source)) or \
                not same_pair(roof.target, self.pair(statement.target)):
            raise SignatureMismatch(f"roof {statement.name} does not go from {statement.source} to {statement.target}")
        self.bind(statement.name, "roof", roof)

    def _RoofAlias(self, statement: RoofAlias) -> None:
        self.bind(statement.name, "roof", Roof.from_morphism(self.morphism(statement.morphism)))

    def _component(self, X: ModulusPair, Y: ModulusPair, decl: ComponentDecl) -> CycleComponent:
        i, j = decl.charts if decl.charts is not None else (0, 0)
        if not (0 <= i < len(X) and 0 <= j < len(Y)):
            raise SignatureMismatch(f"component charts {i}, {j} do not exist")
        variables = chart_product(X, Y, i, j).presentation.variables
        Z = self.ring(decl.normal)
        images = _images(decl.images, variables, Z.variables, f"normalization {decl.normal}")
        if decl.proper is None:
            properness = LeftProperness()
        else:
            witnesses = {w.name: format_expr(w.expr) for w in decl.proper.witnesses}
            properness = LeftProperness(decl.proper.kind, witnesses)
        ideal = Ideal(variables, ideal_in(variables, decl.ideal))
        return CycleComponent(ideal, decl.multiplicity, Normalization(Z, images), properness, i, j)

    def _CorrespondenceDecl(self, statement: CorrespondenceDecl) -> None:
        X, Y = self.pair(statement.source), self.pair(statement.target)
        components = [self._component(X, Y, decl) for decl in statement.components]
        self.bind(statement.name, "correspondence", ModulusCorrespondence(X, Y, components))
