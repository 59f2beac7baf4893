"""Universal fill-in: a square over S factors through the ambient product after blowing up its source."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.affine import Presentation, RingMap, make_ring_map
from src.exception import ConstructionInvariantFailed, RelationNotPreserved, SquareDoesNotCommute
from src.exactalg import Poly
from src.logger import logger
from src.modpair import (
    AmbientMorphism,
    CertifiedSigma,
    ChartMap,
    compose,
    equal_on_interior,
    sigma_blowup,
)
from src.products.ambient import AmbientProductResult, ProductBlock


@dataclass
class FillIn:
    """sigma is None when the source needed no blow-up; morphism starts at sigma's source otherwise."""

    sigma: Optional[CertifiedSigma]
    morphism: AmbientMorphism

    def restrict(self, leg: AmbientMorphism) -> AmbientMorphism:
        """A leg out of the original source, moved to the source of the fill-in."""
        return leg if self.sigma is None else compose(self.sigma.morphism, leg)

    def commutes(self, product: AmbientProductResult, a: AmbientMorphism, b: AmbientMorphism) -> bool:
        return equal_on_interior(compose(self.morphism, product.proj_x), self.restrict(a)) and \
            equal_on_interior(compose(self.morphism, product.proj_t), self.restrict(b))


def _into_total(block: ProductBlock, chart: Presentation, a: RingMap, b: RingMap) -> RingMap:
    """The map Spec(A_m) -> closed tensor induced by the two legs."""
    try:
        return make_ring_map(block.total, chart, list(a.images) + list(b.images))
    except RelationNotPreserved as exc:
        raise ConstructionInvariantFailed(f"legs do not factor through the closed fibre product: {exc}")


def _direct_lift(block: ProductBlock, chart: Presentation, c: RingMap, prefer: int) -> Optional[Tuple[int, RingMap]]:
    """A chart k of the block and a lift into it, when one pulled generator of F divides the other."""
    if not block.blown_up:
        return 0, c
    pulled = [c.apply(block.d_t), c.apply(block.d_x)]
    for k in (prefer, 1 - prefer):
        cofactor = chart.in_principal(pulled[1 - k], pulled[k])
        if cofactor is None:
            continue
        target = block.charts[k].presentation
        return k, make_ring_map(target, chart, list(c.images) + [cofactor])
    return None


def fibre_fill_in(product: AmbientProductResult, a: AmbientMorphism, b: AmbientMorphism,
                  prefer: int = 0) -> FillIn:
    """
    Factor (a: A -> X, b: A -> T) through the ambient product.

    Where F pulled back to a chart of A is principal the lift goes straight into
    the matching blow-up chart (chart `prefer` first); otherwise A is blown up
    along the pulled F and the ratio variables map to the new ratio variables.
    """
    if not equal_on_interior(compose(a, product.first), compose(b, product.second)):
        raise SquareDoesNotCommute("the two legs differ over the interior of the base")
    source = a.source
    blocks, totals, lifts = [], [], []
    for m in range(len(source)):
        block = product.block(a.maps[m].target_chart, b.maps[m].target_chart)
        chart = source[m].presentation
        c = _into_total(block, chart, a.maps[m].ring_map, b.maps[m].ring_map)
        blocks.append(block)
        totals.append(c)
        lifts.append(_direct_lift(block, chart, c, prefer))

    if all(lift is not None for lift in lifts):
        maps = [ChartMap(block.offset + k, ring_map) for block, (k, ring_map) in zip(blocks, lifts)]
        morphism = AmbientMorphism(source, product.pair, maps)
        sigma = None
    else:
        centers = []
        for m, (block, c, lift) in enumerate(zip(blocks, totals, lifts)):
            centers.append([source[m].divisor] if lift is not None else [c.apply(block.d_t), c.apply(block.d_x)])
        sigma = sigma_blowup(source, centers)
        maps = _lift_blown(sigma, product, blocks, totals, lifts)
        morphism = AmbientMorphism(sigma.source, product.pair, maps)

    index = morphism.failed_chart()
    if index is not None:
        raise ConstructionInvariantFailed(f"the fill-in is not admissible on chart {index}")
    logger.debug(f"fill-in: {len(morphism.source)} charts, blow-up={sigma is not None}")
    return FillIn(sigma, morphism)


def _lift_blown(sigma: CertifiedSigma, product: AmbientProductResult, blocks: List[ProductBlock],
                totals: List[RingMap], lifts: list) -> List[ChartMap]:
    maps = []
    for index, chart_map in enumerate(sigma.morphism.maps):
        m = chart_map.target_chart
        chart = sigma.source[index].presentation
        structure = chart_map.ring_map
        block = blocks[m]
        if lifts[m] is not None:
            k, ring_map = lifts[m]
            images = [structure.apply(image) for image in ring_map.images]
            maps.append(ChartMap(block.offset + k, make_ring_map(ring_map.source, chart, images)))
            continue
        # blow-up chart k of A_m maps to chart k of the product block
        k = index - _first_index(sigma, m)
        base_images = [structure.apply(image) for image in totals[m].images]
        ratio = sigma.certificate.charts[m].charts[k].ratios[1 - k]
        target = block.charts[k].presentation
        images = base_images + [Poly.variable(chart.variables, ratio)]
        maps.append(ChartMap(block.offset + k, make_ring_map(target, chart, images)))
    return maps


def _first_index(sigma: CertifiedSigma, m: int) -> int:
    for index, chart_map in enumerate(sigma.morphism.maps):
        if chart_map.target_chart == m:
            return index
    raise ConstructionInvariantFailed(f"no blow-up chart over chart {m}")
