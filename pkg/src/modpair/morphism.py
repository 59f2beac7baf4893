"""Ambient morphisms of modulus pairs and their admissibility verdicts."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.affine import Presentation, RingMap, localize, make_ring_map
from src.exception import NotAdmissible, SignatureMismatch
from src.exactalg import GREVLEX, MonomialOrder, Poly
from src.logger import logger
from src.modpair.pair import ModulusPair


@dataclass
class ChartMap:
    """Source chart -> target chart `target_chart`, given by the ring map target -> source."""

    target_chart: int
    ring_map: RingMap


@dataclass
class ChartVerdict:
    pulled_divisor: Poly
    admissible_cofactor: Optional[Poly]
    minimal_cofactor: Optional[Poly]

    @property
    def admissible(self) -> bool:
        return self.admissible_cofactor is not None

    @property
    def minimal(self) -> bool:
        return self.admissible and self.minimal_cofactor is not None


class AmbientMorphism:
    """
    A chart-wise morphism of total spaces source -> target with cached verdicts.

    admissible: g_X in <phi(g_Y)> + I_X on every source chart, witnessed by a cofactor.
    minimal: additionally phi(g_Y) in <g_X> + I_X.
    """

    def __init__(self, source: ModulusPair, target: ModulusPair, maps: Sequence[ChartMap]):
        if len(maps) != len(source):
            raise SignatureMismatch(f"{len(maps)} chart maps for a source with {len(source)} charts")
        for index, chart_map in enumerate(maps):
            expected_source = source[index].presentation.variables
            expected_target = target[chart_map.target_chart].presentation.variables
            if chart_map.ring_map.source.variables != expected_target or \
                    chart_map.ring_map.target.variables != expected_source:
                raise SignatureMismatch(f"chart map {index} does not match the chart variables")
        self.source = source
        self.target = target
        self.maps: List[ChartMap] = list(maps)
        self.verdicts: List[ChartVerdict] = [self._verdict(i) for i in range(len(maps))]

    def _verdict(self, index: int) -> ChartVerdict:
        chart = self.source[index]
        chart_map = self.maps[index]
        pulled = chart_map.ring_map.apply(self.target[chart_map.target_chart].divisor)
        admissible = chart.presentation.in_principal(chart.divisor, pulled)
        minimal = chart.presentation.in_principal(pulled, chart.divisor) if admissible is not None else None
        return ChartVerdict(pulled, admissible, minimal)

    @property
    def admissible(self) -> bool:
        return all(v.admissible for v in self.verdicts)

    @property
    def minimal(self) -> bool:
        return all(v.minimal for v in self.verdicts)

    def failed_chart(self) -> Optional[int]:
        for index, verdict in enumerate(self.verdicts):
            if not verdict.admissible:
                return index
        return None

    def ring_map(self, index: int) -> RingMap:
        return self.maps[index].ring_map

    def describe(self, order: MonomialOrder = GREVLEX) -> List[dict]:
        out = []
        for index, (chart_map, verdict) in enumerate(zip(self.maps, self.verdicts)):
            entry = {
                "chart": f"{index} -> {chart_map.target_chart}",
                "map": chart_map.ring_map.to_str(order),
                "pulled_divisor": self.source[index].presentation.reduce(verdict.pulled_divisor, order).to_str(order),
            }
            if verdict.admissible_cofactor is not None:
                entry["cofactor"] = verdict.admissible_cofactor.to_str(order)
            out.append(entry)
        return out

    def __repr__(self) -> str:
        return f"AmbientMorphism({len(self.source)} charts -> {len(self.target)} charts)"


def ambient_morphism(source: ModulusPair, target: ModulusPair,
                     maps: Sequence[Tuple[int, Sequence]]) -> AmbientMorphism:
    """Build from (target chart, images of the target variables) per source chart; relations are checked."""
    chart_maps = []
    for index, (target_chart, images) in enumerate(maps):
        ring_map = make_ring_map(target[target_chart].presentation, source[index].presentation, images)
        chart_maps.append(ChartMap(target_chart, ring_map))
    return AmbientMorphism(source, target, chart_maps)


def check_admissible(source: ModulusPair, target: ModulusPair, maps: Sequence[ChartMap]) -> AmbientMorphism:
    morphism = AmbientMorphism(source, target, maps)
    index = morphism.failed_chart()
    if index is not None:
        verdict = morphism.verdicts[index]
        raise NotAdmissible(index, f"{source[index].divisor} is not in <{verdict.pulled_divisor}> + I")
    logger.debug(f"admissible morphism, minimal={morphism.minimal}")
    return morphism


def identity(pair: ModulusPair) -> AmbientMorphism:
    return AmbientMorphism(pair, pair, [ChartMap(i, RingMap.identity(c.presentation)) for i, c in enumerate(pair.charts)])


def compose(first: AmbientMorphism, second: AmbientMorphism) -> AmbientMorphism:
    """second ∘ first : first.source -> second.target."""
    if len(first.target) != len(second.source):
        raise SignatureMismatch("composable morphisms must share the middle pair")
    maps = []
    for chart_map in first.maps:
        middle = second.maps[chart_map.target_chart]
        maps.append(ChartMap(middle.target_chart, middle.ring_map.then(chart_map.ring_map)))
    return AmbientMorphism(first.source, second.target, maps)


def _interior_ring(source: ModulusPair, index: int) -> Presentation:
    """Interior of the closure of chart `index`: (I : g^oo)[u]/(u*g - 1)."""
    chart = source[index]
    closed = Presentation(chart.presentation.variables, chart.dense_ideal)
    return localize(closed, chart.divisor, check=False).presentation


def equal_on_interior(f: AmbientMorphism, g: AmbientMorphism) -> bool:
    """f° = g°: per source chart the two interior maps agree, transported through target gluing if needed."""
    if len(f.source) != len(g.source) or len(f.target) != len(g.target):
        raise SignatureMismatch("morphisms compared on interiors must share source and target")
    for index in range(len(f.source)):
        local = _interior_ring(f.source, index)
        if local.is_empty():
            continue
        phi = f.maps[index].ring_map
        psi = g.maps[index].ring_map
        k, m = f.maps[index].target_chart, g.maps[index].target_chart
        if k == m:
            for a, b in zip(phi.images, psi.images):
                if not local.equal_mod(a.in_ring(local.variables), b.in_ring(local.variables)):
                    return False
            continue
        gluing = f.target.gluings.get((k, m))
        if gluing is None:
            return False
        overlap = phi.apply(gluing.element).in_ring(local.variables)
        inverse = local.inverse(overlap)
        if inverse is None:
            return False
        lifted = [image.in_ring(local.variables) for image in phi.images] + [inverse]
        # chart k localized at the overlap element, mapped into the interior
        extended = RingMap(gluing.local_target.presentation, local, lifted)
        transported = gluing.iso.then(extended)
        for name, image in zip(psi.source.variables, psi.images):
            if not local.equal_mod(transported.image(name), image.in_ring(local.variables)):
                return False
    return True
