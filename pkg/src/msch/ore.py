"""Completing a certified blow-up s: X' -> X and a morphism f: Y -> X to a square over X."""

from dataclasses import dataclass
from typing import List

from src.affine import make_ring_map
from src.exception import InteriorNotIso
from src.exactalg import Ideal
from src.logger import logger
from src.modpair import (
    AmbientMorphism,
    BlowupInDivisor,
    CertifiedSigma,
    ChartMap,
    ComponentClosure,
    Composite,
    compose,
    compose_sigmas,
    decompose_interior,
    equal_on_interior,
    sigma_blowup,
)


@dataclass
class OreSquare:
    """t: Y' -> Y certified, morphism: Y' -> X' with s ∘ morphism = f ∘ t over the interior."""

    t: CertifiedSigma
    morphism: AmbientMorphism

    def commutes(self, s: CertifiedSigma, f: AmbientMorphism) -> bool:
        return equal_on_interior(compose(self.morphism, s.morphism), compose(self.t.morphism, f))


def _complete_blowup(s: CertifiedSigma, f: AmbientMorphism) -> OreSquare:
    certificate: BlowupInDivisor = s.certificate
    offsets, total = [], 0
    for charts in certificate.charts:
        offsets.append(total)
        total += len(charts)
    pulled = []
    for chart_map in f.maps:
        center = certificate.centers[chart_map.target_chart]
        pulled.append([chart_map.ring_map.apply(a) for a in center])
    t = sigma_blowup(f.source, pulled)

    maps = []
    for index, structure in enumerate(t.morphism.maps):
        m = structure.target_chart
        k = f.maps[m].target_chart
        i = index - _first_over(t, m)
        target = s.source[offsets[k] + i].presentation
        ours = certificate.charts[k].charts[i].ratios
        theirs = t.certificate.charts[m].charts[i].ratios
        by_ratio = {name: j for j, name in ours.items()}
        phi = f.maps[m].ring_map
        chart = t.source[index].presentation
        images = []
        for name in target.variables:
            if name in by_ratio:
                images.append(chart.var(theirs[by_ratio[name]]))
            else:
                images.append(structure.ring_map.apply(phi.image(name)))
        maps.append(ChartMap(offsets[k] + i, make_ring_map(target, chart, images)))
    return OreSquare(t, AmbientMorphism(t.source, s.source, maps))


def _first_over(t: CertifiedSigma, m: int) -> int:
    for index, chart_map in enumerate(t.morphism.maps):
        if chart_map.target_chart == m:
            return index
    raise InteriorNotIso(f"no chart of the completion lies over chart {m}")


def _complete_components(s: CertifiedSigma, f: AmbientMorphism) -> OreSquare:
    certificate: ComponentClosure = s.certificate
    Y = f.source
    n_x, n_y = len(s.target), len(Y)
    pulled: List[List[Ideal]] = []
    for component in certificate.components:
        per_chart = []
        for m, chart_map in enumerate(f.maps):
            J = component[chart_map.target_chart]
            variables = Y[m].presentation.variables
            per_chart.append(Ideal(variables, [chart_map.ring_map.apply(g) for g in J.generators]))
        pulled.append(per_chart)
    t = decompose_interior(Y, *pulled).sigma

    maps = []
    for index in range(len(t.source)):
        c, m = divmod(index, n_y)
        k = f.maps[m].target_chart
        target = s.source[c * n_x + k].presentation
        chart = t.source[index].presentation
        images = [image.in_ring(chart.variables) for image in f.maps[m].ring_map.images]
        maps.append(ChartMap(c * n_x + k, make_ring_map(target, chart, images)))
    return OreSquare(t, AmbientMorphism(t.source, s.source, maps))


def ore_complete(s: CertifiedSigma, f: AmbientMorphism) -> OreSquare:
    """
    Pull the certificate of s back along f.

    Blow-up centers and interior components are pulled back chart by chart, so
    the completion t is again certified; composites are completed step by step.
    """
    certificate = s.certificate
    if isinstance(certificate, BlowupInDivisor):
        square = _complete_blowup(s, f)
    elif isinstance(certificate, ComponentClosure):
        square = _complete_components(s, f)
    elif isinstance(certificate, Composite):
        current, legs = f, []
        for step in certificate.steps:
            partial = ore_complete(step, current)
            legs.append(partial.t)
            current = partial.morphism
        square = OreSquare(compose_sigmas(legs), current)
    else:
        raise InteriorNotIso(f"cannot complete along a {certificate.kind} certificate")
    logger.debug(f"ore completion along {certificate.kind}: {len(square.t.source)} charts")
    return square
