"""
Finite correspondences with modulus: components on X̄ x Ȳ, their closures,
left-properness certificates and the modulus condition on a normalization.

Primality of a component and normality of its witness ring are taken from the
caller and recorded as asserted; every divisor inequality is checked exactly.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from src.affine import PolyLike, Presentation, RingMap, TensorProduct, make_ring_map, tensor_over
from src.cycles.divisor import DivisorComparison, DivisorOnRing, divisor_geq
from src.exception import NotAdmissible, RelationNotPreserved, SignatureMismatch, WitnessInvalid
from src.exactalg import GREVLEX, Ideal, MonomialOrder, Poly, fresh_variable
from src.logger import logger
from src.modpair import AmbientMorphism, ModulusPair
from src.modpair.cover import is_monic

PROPERNESS_KINDS = ("graph", "finite", "asserted")


@dataclass
class LeftProperness:
    """
    Why the closure of a component is proper over X̄.

    graph: every Ȳ variable is a polynomial in the X̄ variables on the closure.
    finite: one monic witness in T over the X̄ variables per Ȳ variable.
    asserted: taken on trust and reported as such.
    """

    kind: str = "asserted"
    witnesses: Dict[str, PolyLike] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in PROPERNESS_KINDS:
            raise WitnessInvalid(f"unknown properness certificate {self.kind!r}")


@dataclass
class Normalization:
    """Z̃ with the images of the product variables; defines ν from the closure to Z̃."""

    presentation: Presentation
    images: List[PolyLike]


@dataclass
class CycleComponent:
    ideal: Ideal
    multiplicity: int
    normalization: Normalization
    properness: LeftProperness = field(default_factory=LeftProperness)
    source_chart: int = 0
    target_chart: int = 0

    def __post_init__(self):
        if self.multiplicity == 0:
            raise WitnessInvalid("a cycle component has nonzero multiplicity")


def chart_product(X: ModulusPair, Y: ModulusPair, i: int, j: int) -> TensorProduct:
    """X̄_i x Ȳ_j over Q; Ȳ variables are renamed where they clash."""
    point = Presentation.point()
    left = RingMap(point, X[i].presentation, [])
    right = RingMap(point, Y[j].presentation, [])
    return tensor_over(point, left, right)


@dataclass
class CycleClosure:
    product: TensorProduct
    presentation: Presentation
    source_divisor: Poly
    target_divisor: Poly

    @property
    def source_variables(self):
        return self.product.left.source.variables

    @property
    def target_variables(self):
        return tuple(self.product.renaming[v] for v in self.product.right.source.variables)


def component_closure(component: CycleComponent, X: ModulusPair, Y: ModulusPair) -> CycleClosure:
    """Closure in X̄ x Ȳ of the component's trace on the interior."""
    product = chart_product(X, Y, component.source_chart, component.target_chart)
    P = product.presentation
    if component.ideal.ring != P.variables:
        raise SignatureMismatch(f"component ideal lives in {component.ideal.ring}, expected {P.variables}")
    gx = product.left.apply(X[component.source_chart].divisor)
    gy = product.right.apply(Y[component.target_chart].divisor)
    closure = P.with_relations(component.ideal.generators).saturate(gx * gy)
    if closure.is_empty():
        raise WitnessInvalid(f"{component.ideal} does not meet the interior of X x Y")
    return CycleClosure(product, closure, gx, gy)


def _graph_witnesses(closure: CycleClosure, T: str) -> Dict[str, Poly]:
    source, target = closure.source_variables, closure.target_variables
    ring = target + source
    ideal = closure.presentation.ideal.in_ring(ring)
    order = MonomialOrder.elimination(len(target))
    witnesses = {}
    for name in target:
        rest = ideal.normal_form(Poly.variable(ring, name), order)
        if set(rest.support()) & set(target):
            raise WitnessInvalid(f"{name} is not a function of {', '.join(source)} on the closure")
        witnesses[name] = Poly.variable(source + (T,), T) - rest.in_ring(source + (T,))
    return witnesses


def check_properness(component: CycleComponent, closure: CycleClosure) -> Dict[str, str]:
    """Verify the properness certificate; returns the monic witnesses as strings."""
    certificate = component.properness
    if certificate.kind == "asserted":
        return {}
    P = closure.presentation
    T = fresh_variable("T", P.variables)
    ring = closure.source_variables + (T,)
    if certificate.kind == "graph":
        witnesses = _graph_witnesses(closure, T)
    else:
        witnesses = {}
        for name, witness in certificate.witnesses.items():
            witnesses[name] = Poly.parse(witness, ring) if isinstance(witness, str) else witness.in_ring(ring)
    images = [P.var(name) for name in closure.source_variables]
    for name in closure.target_variables:
        witness = witnesses.get(name)
        if witness is None:
            raise WitnessInvalid(f"no monic witness for {name}")
        if not is_monic(witness, len(ring) - 1):
            raise WitnessInvalid(f"the witness for {name} is not monic in {T}")
        if not P.contains(witness.substitute(images + [P.var(name)], P.variables)):
            raise WitnessInvalid(f"the witness for {name} does not vanish on the closure")
    return {name: witnesses[name].to_str() for name in closure.target_variables}


@dataclass
class KmsyVerdict:
    normalization: Presentation
    pulled_source: Poly
    pulled_target: Poly
    comparison: DivisorComparison

    @property
    def holds(self) -> bool:
        return self.comparison.holds

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, Any]:
        out = {
            "X∞ on Z": self.normalization.reduce(self.pulled_source, order).to_str(order),
            "Y∞ on Z": self.normalization.reduce(self.pulled_target, order).to_str(order),
        }
        if self.comparison.cofactor is not None:
            out["cofactor"] = self.comparison.cofactor.to_str(order)
        return out


def _normalization_map(component: CycleComponent, closure: CycleClosure) -> RingMap:
    Z = component.normalization.presentation
    if Z.is_empty():
        raise WitnessInvalid("the normalization witness is the empty scheme")
    try:
        return make_ring_map(closure.presentation, Z, component.normalization.images)
    except (RelationNotPreserved, SignatureMismatch) as error:
        raise WitnessInvalid(f"the normalization map is not defined on the closure: {error.message}")


def kmsy_modulus_check(component: CycleComponent, X: ModulusPair, Y: ModulusPair) -> KmsyVerdict:
    """ν*(X∞ x Ȳ) >= ν*(X̄ x Y∞) on the normalization witness."""
    closure = component_closure(component, X, Y)
    nu = _normalization_map(component, closure)
    Z = nu.target
    pulled_x = Z.reduce(nu.apply(closure.source_divisor))
    pulled_y = Z.reduce(nu.apply(closure.target_divisor))
    if not Z.is_nonzerodivisor(pulled_x * pulled_y):
        raise WitnessInvalid("the normalization witness does not dominate the closure")
    comparison = divisor_geq(DivisorOnRing(Z, pulled_x), DivisorOnRing(Z, pulled_y))
    logger.debug(f"kmsy on {Z}: {pulled_x} >= {pulled_y} is {comparison.holds}")
    return KmsyVerdict(Z, pulled_x, pulled_y, comparison)


@dataclass
class ComponentReport:
    component: CycleComponent
    properness: Dict[str, str]
    kmsy: KmsyVerdict

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, Any]:
        return {
            "component": self.component.ideal.to_str(order),
            "charts": f"{self.component.source_chart} x {self.component.target_chart}",
            "mult": self.component.multiplicity,
            "prime": "asserted",
            "normal": "asserted",
            "proper": self.component.properness.kind,
            "witnesses": [f"{name}: {w}" for name, w in sorted(self.properness.items())],
            "modulus": self.kmsy.holds,
            **self.kmsy.describe(order),
        }


@dataclass
class ModulusCorrespondence:
    source: ModulusPair
    target: ModulusPair
    components: List[CycleComponent]
    reports: List[ComponentReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.kmsy.holds for report in self.reports)

    def describe(self, order: MonomialOrder = GREVLEX) -> List[Dict[str, Any]]:
        return [report.describe(order) for report in self.reports]


def check_correspondence(X: ModulusPair, Y: ModulusPair,
                         components: Sequence[CycleComponent]) -> ModulusCorrespondence:
    """Run every component check and collect the reports; failing modulus conditions are reported, not raised."""
    reports = []
    for component in components:
        closure = component_closure(component, X, Y)
        properness = check_properness(component, closure)
        reports.append(ComponentReport(component, properness, kmsy_modulus_check(component, X, Y)))
    return ModulusCorrespondence(X, Y, list(components), reports)


def make_correspondence(X: ModulusPair, Y: ModulusPair,
                        components: Sequence[CycleComponent]) -> ModulusCorrespondence:
    correspondence = check_correspondence(X, Y, components)
    for index, report in enumerate(correspondence.reports):
        if not report.kmsy.holds:
            raise NotAdmissible(report.component.source_chart,
                                f"component {index} fails the modulus condition")
    return correspondence


def graph_cycle(f: AmbientMorphism) -> ModulusCorrespondence:
    """The graph of an admissible morphism, one multiplicity-one component per nonempty source chart."""
    index = f.failed_chart()
    if index is not None:
        raise NotAdmissible(index, "the graph of a non-admissible morphism is not a correspondence with modulus")
    X, Y = f.source, f.target
    components = []
    for i, chart_map in enumerate(f.maps):
        if X[i].empty:
            continue
        j = chart_map.target_chart
        product = chart_product(X, Y, i, j)
        P = product.presentation
        phi = chart_map.ring_map
        generators = [product.right.apply(name) - product.left.apply(image)
                      for name, image in zip(Y[j].presentation.variables, phi.images)]
        normalization = Normalization(X[i].presentation, list(X[i].presentation.gens()) + list(phi.images))
        components.append(CycleComponent(Ideal(P.variables, generators), 1, normalization,
                                         LeftProperness("graph"), i, j))
    logger.debug(f"graph cycle with {len(components)} components")
    return make_correspondence(X, Y, components)
