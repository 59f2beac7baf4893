"""
Certificates for abstract admissible blow-ups.

Only three shapes are certifiable: a blow-up whose center lives inside the
divisor, a decomposition of the interior into closed-open components, and
composites of those. `certify_sigma` re-checks a certificate against the
morphism it claims to describe and returns the pair as a `CertifiedSigma`.
"""

from dataclasses import dataclass, field
from typing import ClassVar, List, Sequence, Union

from src.affine import (
    BlowupChartSet,
    PolyLike,
    Presentation,
    RingMap,
    blowup_charts,
    localize,
    verify_localized_inverse,
)
from src.exception import (
    CenterNotInDivisor,
    InteriorNotIso,
    NotCoveringInterior,
    NotDisjointOnInterior,
    NotMinimal,
)
from src.exactalg import Ideal, Poly
from src.logger import logger
from src.modpair.morphism import AmbientMorphism, ChartMap, compose
from src.modpair.pair import ModulusPair, coproduct, make_pair, shift_gluings


@dataclass
class SigmaCertificate:
    kind: ClassVar[str] = "sigma"


@dataclass
class BlowupInDivisor(SigmaCertificate):
    """Blow-up of target chart k at centers[k]; source charts are the blow-up charts in block order."""

    kind: ClassVar[str] = "blowup"
    centers: List[List[Poly]] = field(default_factory=list)
    charts: List[BlowupChartSet] = field(default_factory=list)


@dataclass
class ComponentClosure(SigmaCertificate):
    """components[c][k] cuts component c out of target chart k; source charts are component-major."""

    kind: ClassVar[str] = "components"
    components: List[List[Ideal]] = field(default_factory=list)


@dataclass
class Composite(SigmaCertificate):
    """steps[0] ends at the target, each later step ends at the source of the previous one."""

    kind: ClassVar[str] = "composite"
    steps: List["CertifiedSigma"] = field(default_factory=list)


@dataclass
class CertifiedSigma:
    morphism: AmbientMorphism
    certificate: SigmaCertificate

    @property
    def source(self) -> ModulusPair:
        return self.morphism.source

    @property
    def target(self) -> ModulusPair:
        return self.morphism.target

    def describe(self) -> dict:
        out = {"kind": self.certificate.kind, "charts": len(self.source)}
        if isinstance(self.certificate, BlowupInDivisor):
            out["centers"] = [[str(a) for a in center] for center in self.certificate.centers]
        elif isinstance(self.certificate, ComponentClosure):
            out["components"] = [[str(J) for J in comp] for comp in self.certificate.components]
        else:
            out["steps"] = [step.certificate.kind for step in self.certificate.steps]
        return out


def same_pair(first: ModulusPair, second: ModulusPair) -> bool:
    if first is second:
        return True
    return len(first) == len(second) and all(
        a.presentation.same_as(b.presentation) for a, b in zip(first.charts, second.charts))


def _same_maps(first: AmbientMorphism, second: AmbientMorphism) -> bool:
    for index, (a, b) in enumerate(zip(first.maps, second.maps)):
        if a.target_chart != b.target_chart:
            return False
        if not a.ring_map.agrees_with(b.ring_map, first.source[index].presentation.ideal):
            return False
    return True


# ---------- blow-ups ----------
def _interior_inverse(base: Presentation, chart: Presentation, structure: RingMap,
                      divisor: Poly, a_i: Poly, center: Sequence[Poly], ratios: dict) -> bool:
    """Chart i restricted to the interior is D(g*a_i) of the base: exhibit the two inverse maps."""
    chart_interior = localize(chart, structure.apply(divisor), check=False)
    base_local = localize(base, divisor * a_i, check=False)
    S, T = chart_interior.presentation, base_local.presentation
    inverse = S.inverse(S.poly(structure.apply(divisor * a_i).in_ring(S.variables)))
    if inverse is None:
        return False
    v = base_local.inverse
    g = divisor.in_ring(T.variables)
    by_name = {ratios[j]: center[j].in_ring(T.variables) * v * g for j in ratios}
    down = []
    for name in S.variables:
        if name == chart_interior.unit:
            down.append(v * a_i.in_ring(T.variables))
        elif name in by_name:
            down.append(by_name[name])
        else:
            down.append(T.var(name))
    to_base = RingMap(S, T, down)
    to_chart = RingMap(T, S, [S.var(name) for name in base.variables] + [inverse])
    if to_base.preserved_relations() is not None or to_chart.preserved_relations() is not None:
        return False
    return verify_localized_inverse(to_base, to_chart)


def _certify_blowup(morphism: AmbientMorphism, certificate: BlowupInDivisor) -> None:
    target = morphism.target
    index = 0
    for k, (center, charts) in enumerate(zip(certificate.centers, certificate.charts)):
        chart = target[k]
        if not chart.empty:
            ideal = chart.presentation.ideal.with_generators(center)
            if not ideal.radical_contains(chart.divisor):
                raise CenterNotInDivisor(f"the divisor {chart.divisor} of chart {k} does not vanish on V({center})")
        for i, blown in enumerate(charts.charts):
            if index >= len(morphism.source):
                raise InteriorNotIso("the source has fewer charts than the blow-up")
            structure = charts.base_map(i)
            source_chart = morphism.source[index].presentation
            chart_map = morphism.maps[index]
            if chart_map.target_chart != k or not source_chart.same_as(blown.presentation) or \
                    not chart_map.ring_map.agrees_with(structure, source_chart.ideal):
                raise InteriorNotIso(f"source chart {index} is not chart {i} of the blow-up of target chart {k}")
            if not chart.empty and not _interior_inverse(chart.presentation, blown.presentation, structure,
                                                         chart.divisor, center[i], center, blown.ratios):
                raise InteriorNotIso(f"source chart {index} is not isomorphic to the target over the interior")
            index += 1
    if index != len(morphism.source):
        raise InteriorNotIso("the source has charts outside the blow-up")


# ---------- closed-open components ----------
def _component_checks(pair: ModulusPair, components: List[List[Ideal]], error_disjoint, error_cover) -> None:
    for k, chart in enumerate(pair.charts):
        if chart.empty:
            continue
        for c in range(len(components)):
            for d in range(c + 1, len(components)):
                meet = chart.presentation.ideal.sum(components[c][k]).sum(components[d][k])
                if not meet.saturation(chart.divisor).is_unit():
                    raise error_disjoint(f"components {c} and {d} meet over the interior of chart {k}")
        product = components[0][k]
        for comp in components[1:]:
            product = product.product(comp[k])
        if not chart.dense_ideal.contains_ideal(product):
            raise error_cover(f"components do not cover the interior of chart {k}")


def _component_chart(chart, J: Ideal) -> Presentation:
    return Presentation(chart.presentation.variables, chart.presentation.ideal.sum(J).saturation(chart.divisor))


def _certify_components(morphism: AmbientMorphism, certificate: ComponentClosure) -> None:
    target = morphism.target
    n = len(target)
    if len(morphism.source) != n * len(certificate.components):
        raise InteriorNotIso("the source is not the disjoint union of the components")
    _component_checks(target, certificate.components, InteriorNotIso, InteriorNotIso)
    for c, comp in enumerate(certificate.components):
        for k, chart in enumerate(target.charts):
            index = c * n + k
            source_chart = morphism.source[index].presentation
            chart_map = morphism.maps[index]
            identity = RingMap(chart.presentation, source_chart, [source_chart.var(v) for v in chart.presentation.variables])
            if chart_map.target_chart != k or not source_chart.same_as(_component_chart(chart, comp[k])) or \
                    not chart_map.ring_map.agrees_with(identity, source_chart.ideal):
                raise InteriorNotIso(f"source chart {index} is not component {c} of target chart {k}")


# ---------- composites ----------
def _certify_composite(morphism: AmbientMorphism, certificate: Composite) -> None:
    steps = certificate.steps
    if not steps:
        raise InteriorNotIso("a composite certificate needs at least one step")
    if not same_pair(steps[0].target, morphism.target) or not same_pair(steps[-1].source, morphism.source):
        raise InteriorNotIso("the composite does not connect source and target")
    chain = steps[-1].morphism
    for previous, step in zip(reversed(steps[:-1]), reversed(steps[1:])):
        if not same_pair(previous.source, step.target):
            raise InteriorNotIso("consecutive steps do not share a pair")
        chain = compose(chain, previous.morphism)
    if not _same_maps(morphism, chain):
        raise InteriorNotIso("the morphism is not the composite of the steps")


def certify_sigma(morphism: AmbientMorphism, certificate: SigmaCertificate) -> CertifiedSigma:
    if not morphism.minimal:
        raise NotMinimal("a certified blow-up must be a minimal morphism")
    if isinstance(certificate, BlowupInDivisor):
        _certify_blowup(morphism, certificate)
    elif isinstance(certificate, ComponentClosure):
        _certify_components(morphism, certificate)
    elif isinstance(certificate, Composite):
        _certify_composite(morphism, certificate)
    else:
        raise InteriorNotIso(f"unknown certificate {type(certificate).__name__}")
    logger.debug(f"certified {certificate.kind} with {len(morphism.source)} source charts")
    return CertifiedSigma(morphism, certificate)


# ---------- factories ----------
def sigma_blowup(pair: ModulusPair, centers: Sequence[Sequence[PolyLike]]) -> CertifiedSigma:
    """Blow up chart k of the pair at centers[k] and certify the result."""
    centers = [[chart.presentation.poly(a) for a in center] for chart, center in zip(pair.charts, centers)]
    chart_sets = [blowup_charts(chart.presentation, center) for chart, center in zip(pair.charts, centers)]
    charts, gluings, maps = [], {}, []
    for k, (chart, blown) in enumerate(zip(pair.charts, chart_sets)):
        gluings.update(shift_gluings(blown.gluings, len(charts)))
        for i, piece in enumerate(blown.charts):
            structure = blown.base_map(i)
            charts.append((piece.presentation, structure.apply(chart.divisor)))
            maps.append(ChartMap(k, structure))
    source = make_pair(charts, gluings)
    return certify_sigma(AmbientMorphism(source, pair, maps), BlowupInDivisor(centers, chart_sets))


def identity_sigma(pair: ModulusPair) -> CertifiedSigma:
    """The trivial blow-up at the divisor itself."""
    return sigma_blowup(pair, [[chart.divisor] for chart in pair.charts])


def compose_sigmas(steps: Sequence[CertifiedSigma]) -> CertifiedSigma:
    """steps[0] ends at the final target; returns the certified composite."""
    steps = list(steps)
    if len(steps) == 1:
        return steps[0]
    chain = steps[-1].morphism
    for previous in reversed(steps[:-1]):
        chain = compose(chain, previous.morphism)
    return certify_sigma(chain, Composite(steps))


@dataclass
class Decomposition:
    parts: List[ModulusPair]
    sigma: CertifiedSigma


def _per_chart(pair: ModulusPair, component: Union[Ideal, Sequence[Ideal]]) -> List[Ideal]:
    if isinstance(component, Ideal):
        return [component] * len(pair)
    return list(component)


def decompose_interior(pair: ModulusPair, *components: Union[Ideal, Sequence[Ideal]]) -> Decomposition:
    """Split the pair along ideals that separate its interior into closed-open pieces."""
    comps = [_per_chart(pair, J) for J in components]
    _component_checks(pair, comps, NotDisjointOnInterior, NotCoveringInterior)
    parts = []
    for comp in comps:
        charts = []
        for k, chart in enumerate(pair.charts):
            piece = _component_chart(chart, comp[k])
            charts.append((piece, piece.reduce(chart.divisor)))
        parts.append(make_pair(charts))
    source = coproduct(*parts, drop_empty=False)
    n = len(pair)
    maps = []
    for index, chart in enumerate(source.charts):
        base = pair[index % n].presentation
        maps.append(ChartMap(index % n, RingMap(base, chart.presentation, chart.presentation.gens())))
    sigma = certify_sigma(AmbientMorphism(source, pair, maps), ComponentClosure(comps))
    return Decomposition(parts, sigma)
