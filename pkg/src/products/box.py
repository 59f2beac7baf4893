"""Box products X ⊠_S T, the maps between them, and their comparison with the ambient product."""

from dataclasses import dataclass, field
from typing import Dict, List

from src.affine import Presentation, RingMap, TensorProduct, make_ring_map
from src.exception import ConstructionInvariantFailed, NotAdmissible, RelationNotPreserved, SignatureMismatch
from src.exactalg import GREVLEX, MonomialOrder, Poly
from src.logger import logger
from src.modpair import AmbientMorphism, CertifiedSigma, ChartMap, ModulusPair, make_pair, sigma_blowup
from src.products.ambient import AmbientProductResult, ambient_product, check_common_base, fibre_total


@dataclass
class BoxBlock:
    x_chart: int
    t_chart: int
    tensor: TensorProduct
    total: Presentation
    d_t: Poly
    d_x: Poly
    base_divisor: Poly
    cofactor: Poly
    divisor: Poly


@dataclass
class BoxProductResult:
    """One chart per (X chart, T chart) block; projections are honest ring maps on total spaces."""

    pair: ModulusPair
    proj_x: AmbientMorphism
    proj_t: AmbientMorphism
    blocks: List[BoxBlock]
    first: AmbientMorphism
    second: AmbientMorphism

    def block_index(self, x_chart: int, t_chart: int) -> int:
        for index, block in enumerate(self.blocks):
            if block.x_chart == x_chart and block.t_chart == t_chart:
                return index
        raise SignatureMismatch(f"no box block for charts ({x_chart}, {t_chart})")

    def describe(self, order: MonomialOrder = GREVLEX) -> List[Dict[str, str]]:
        out = []
        for block in self.blocks:
            info = {
                "ring": block.total.to_str(order),
                "divisor": block.total.reduce(block.divisor, order).to_str(order),
                "cofactor": block.cofactor.to_str(order),
            }
            out.append(info)
        return out


def box_product(f: AmbientMorphism, g: AmbientMorphism) -> BoxProductResult:
    """
    X ⊠_S T: the closed tensor with divisor h_X * d_T, where d_X = s * h_X is
    the admissibility cofactor of f. The generator times s equals d_X * d_T.
    """
    check_common_base(f, g)
    blocks: List[BoxBlock] = []
    charts, x_maps, t_maps = [], [], []
    for i in range(len(f.source)):
        cofactor = f.verdicts[i].admissible_cofactor
        if cofactor is None:
            raise NotAdmissible(i, "the first factor of a box product must be admissible")
        for j in range(len(g.source)):
            tensor, total, d_x, d_t = fibre_total(f, g, i, j)
            s = tensor.left.apply(f.verdicts[i].pulled_divisor)
            h = tensor.left.apply(cofactor)
            divisor = total.reduce(h * d_t)
            if not total.equal_mod(divisor * s, d_x * d_t):
                raise ConstructionInvariantFailed(f"box divisor of block ({i}, {j}) does not recover d_X*d_T")
            blocks.append(BoxBlock(i, j, tensor, total, d_t, d_x, s, h, divisor))
            charts.append((total, divisor))
            x_maps.append(ChartMap(i, RingMap(f.source[i].presentation, total, tensor.left.images)))
            t_maps.append(ChartMap(j, RingMap(g.source[j].presentation, total, tensor.right.images)))
    pair = make_pair(charts)
    logger.debug(f"box product: {len(pair)} charts")
    return BoxProductResult(pair, AmbientMorphism(pair, f.source, x_maps),
                            AmbientMorphism(pair, g.source, t_maps), blocks, f, g)


def box_map(first: BoxProductResult, second: BoxProductResult, f: AmbientMorphism) -> AmbientMorphism:
    """
    The map Y ⊠_S T -> X ⊠_S T induced by f: Y -> X and the identity of T.

    `first` is built from Y -> S and `second` from X -> S, both against the same T.
    """
    if len(first.second.source) != len(second.second.source):
        raise SignatureMismatch("box products compared along different second factors")
    maps = []
    for block in first.blocks:
        x_chart = f.maps[block.x_chart].target_chart
        index = second.block_index(x_chart, block.t_chart)
        target = second.blocks[index]
        f_images = [block.tensor.left.apply(image) for image in f.maps[block.x_chart].ring_map.images]
        images = f_images + list(block.tensor.right.images)
        try:
            ring_map = make_ring_map(target.total, block.total, images)
        except RelationNotPreserved as exc:
            raise ConstructionInvariantFailed(f"induced box map does not respect relations: {exc}")
        maps.append(ChartMap(index, ring_map))
    return AmbientMorphism(first.pair, second.pair, maps)


@dataclass
class RoofComparison:
    """A certified blow-up of the box product and an ambient morphism from it to the ambient product."""

    sigma: CertifiedSigma
    morphism: AmbientMorphism
    box: BoxProductResult = field(repr=False, default=None)
    times: AmbientProductResult = field(repr=False, default=None)

    def witnesses(self) -> List[str]:
        return [v.admissible_cofactor.to_str() for v in self.morphism.verdicts if v.admissible]


def box_to_times(f: AmbientMorphism, g: AmbientMorphism) -> RoofComparison:
    """
    Blow the box product up along F = <d_T, d_X> block by block; the identity on
    total spaces then maps it admissibly onto the ambient product.
    """
    box = box_product(f, g)
    times = ambient_product(f, g)
    centers = []
    for box_block, times_block in zip(box.blocks, times.blocks):
        centers.append(times_block.center if times_block.blown_up else [box_block.divisor])
    sigma = sigma_blowup(box.pair, centers)
    if len(sigma.source) != len(times.pair):
        raise ConstructionInvariantFailed("the blown-up box product and the ambient product differ in charts")
    maps = []
    for k, chart in enumerate(sigma.source.charts):
        target = times.pair[k].presentation
        try:
            ring_map = make_ring_map(target, chart.presentation, chart.presentation.gens())
        except RelationNotPreserved as exc:
            raise ConstructionInvariantFailed(f"chart {k} of the blown-up box is not the ambient chart: {exc}")
        maps.append(ChartMap(k, ring_map))
    morphism = AmbientMorphism(sigma.source, times.pair, maps)
    index = morphism.failed_chart()
    if index is not None:
        raise ConstructionInvariantFailed(f"pulled box divisor does not dominate the product divisor on chart {index}")
    return RoofComparison(sigma, morphism, box, times)
