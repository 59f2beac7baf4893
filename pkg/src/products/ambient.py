"""
Ambient products T x^p_S X.

Per pair of charts (X_i, T_j) the fibre product of total spaces is closed up
around the interior (the tensor ideal saturated by d_X * d_T), then blown up
along F = <d_T, d_X> unless one generator already divides the other. On every
resulting chart the exceptional generator e satisfies <d_T, d_X> = <e> and the
divisor is the cofactor d_T * d_X / e.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.affine import (
    BlowupChartSet,
    PolyLike,
    Presentation,
    RingMap,
    TensorProduct,
    blowup_charts,
    localize,
    tensor_over,
)
from src.exception import ConstructionInvariantFailed, SignatureMismatch
from src.exactalg import GREVLEX, MonomialOrder, Poly
from src.logger import logger
from src.modpair import (
    AmbientMorphism,
    ChartMap,
    ModulusPair,
    make_pair,
    same_pair,
    shift_gluings,
    sigma_blowup,
)


@dataclass
class ProductChart:
    """Divisor decomposition on one chart of the product: d_T, d_X, the exceptional e and d_T*d_X/e."""

    presentation: Presentation
    structure: RingMap
    d_t: Poly
    d_x: Poly
    exceptional: Poly
    divisor: Poly

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, str]:
        P = self.presentation
        return {
            "ring": P.to_str(order),
            "d_t": P.reduce(self.d_t, order).to_str(order),
            "d_x": P.reduce(self.d_x, order).to_str(order),
            "exceptional": P.reduce(self.exceptional, order).to_str(order),
            "divisor": P.reduce(self.divisor, order).to_str(order),
        }


@dataclass
class ProductBlock:
    """The charts coming from the pair (X chart `x_chart`, T chart `t_chart`)."""

    x_chart: int
    t_chart: int
    tensor: TensorProduct
    total: Presentation
    d_t: Poly
    d_x: Poly
    offset: int
    blowup: Optional[BlowupChartSet] = None
    charts: List[ProductChart] = field(default_factory=list)

    @property
    def center(self) -> List[Poly]:
        return [self.d_t, self.d_x]

    @property
    def blown_up(self) -> bool:
        return self.blowup is not None


@dataclass
class AmbientProductResult:
    pair: ModulusPair
    proj_x: AmbientMorphism
    proj_t: AmbientMorphism
    blocks: List[ProductBlock]
    first: AmbientMorphism
    second: AmbientMorphism

    @property
    def base(self) -> ModulusPair:
        return self.first.target

    def block(self, x_chart: int, t_chart: int) -> ProductBlock:
        for block in self.blocks:
            if block.x_chart == x_chart and block.t_chart == t_chart:
                return block
        raise SignatureMismatch(f"no product block for charts ({x_chart}, {t_chart})")

    def chart_data(self) -> List[ProductChart]:
        return [chart for block in self.blocks for chart in block.charts]

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, object]:
        return {
            "charts": [chart.describe(order) for chart in self.chart_data()],
            "centers": [
                [p.to_str(order) for p in block.center] if block.blown_up else "principal"
                for block in self.blocks
            ],
        }


def check_common_base(f: AmbientMorphism, g: AmbientMorphism) -> None:
    if not same_pair(f.target, g.target):
        raise SignatureMismatch("product factors must map to the same base pair")
    if len(f.target) != 1:
        raise SignatureMismatch("products are computed over a single-chart base")


def fibre_total(f: AmbientMorphism, g: AmbientMorphism, i: int, j: int) -> Tuple[TensorProduct, Presentation, Poly, Poly]:
    """X_i ⊗_S T_j saturated by d_X * d_T, with the two pulled divisor generators."""
    base = f.target[0].presentation
    tensor = tensor_over(base, f.maps[i].ring_map, g.maps[j].ring_map)
    d_x = tensor.left.apply(f.source[i].divisor)
    d_t = tensor.right.apply(g.source[j].divisor)
    total = tensor.presentation.saturate(d_x * d_t)
    return tensor, total, d_x, d_t


def _product_chart(presentation: Presentation, structure: RingMap, d_t: Poly, d_x: Poly, e: Poly) -> ProductChart:
    if presentation.is_empty():
        return ProductChart(presentation, structure, d_t, d_x, e, presentation.zero())
    divisor = presentation.in_principal(d_t * d_x, e)
    if divisor is None:
        raise ConstructionInvariantFailed(f"{e} does not divide d_T*d_X on {presentation}")
    return ProductChart(presentation, structure, d_t, d_x, e, divisor)


def _block(f: AmbientMorphism, g: AmbientMorphism, i: int, j: int, offset: int) -> ProductBlock:
    tensor, total, d_x, d_t = fibre_total(f, g, i, j)
    block = ProductBlock(i, j, tensor, total, d_t, d_x, offset)
    identity = RingMap.identity(total)
    if total.is_empty() or total.in_principal(d_x, d_t) is not None:
        block.charts.append(_product_chart(total, identity, d_t, d_x, d_t))
    elif total.in_principal(d_t, d_x) is not None:
        block.charts.append(_product_chart(total, identity, d_t, d_x, d_x))
    else:
        block.blowup = blowup_charts(total, block.center)
        for k, piece in enumerate(block.blowup.charts):
            structure = block.blowup.base_map(k)
            block.charts.append(_product_chart(
                piece.presentation, structure, structure.apply(d_t), structure.apply(d_x), piece.exceptional))
    return block


def ambient_product(f: AmbientMorphism, g: AmbientMorphism) -> AmbientProductResult:
    """
    T x^p_S X for admissible f: X -> S and g: T -> S.

    Charts are listed block by block, X charts outer and T charts inner; blow-up
    gluings are kept inside each block.
    """
    check_common_base(f, g)
    blocks: List[ProductBlock] = []
    charts, gluings, x_maps, t_maps = [], {}, [], []
    for i in range(len(f.source)):
        for j in range(len(g.source)):
            block = _block(f, g, i, j, len(charts))
            blocks.append(block)
            if block.blowup is not None:
                gluings.update(shift_gluings(block.blowup.gluings, block.offset))
            for chart in block.charts:
                charts.append((chart.presentation, chart.divisor))
                x_maps.append(ChartMap(i, block.tensor.left.then(chart.structure)))
                t_maps.append(ChartMap(j, block.tensor.right.then(chart.structure)))
    pair = make_pair(charts, gluings)
    proj_x = AmbientMorphism(pair, f.source, x_maps)
    proj_t = AmbientMorphism(pair, g.source, t_maps)
    if not proj_x.admissible or not proj_t.admissible:
        raise ConstructionInvariantFailed("a projection out of the ambient product is not admissible")
    logger.debug(f"ambient product: {len(blocks)} blocks, {len(pair)} charts, "
                 f"{sum(b.blown_up for b in blocks)} blown up")
    return AmbientProductResult(pair, proj_x, proj_t, blocks, f, g)


def exceptional_check(result: AmbientProductResult) -> List[Dict[str, str]]:
    """<d_T, d_X> + I = <e> + I on every chart; returns the exceptional generators."""
    witnesses = []
    for index, chart in enumerate(result.chart_data()):
        P = chart.presentation
        if P.is_empty():
            continue
        spanned = P.ideal.with_generators([chart.d_t, chart.d_x])
        principal = P.ideal.with_generators([chart.exceptional])
        if not spanned.equal(principal):
            raise ConstructionInvariantFailed(f"<d_T, d_X> differs from <e> on chart {index}")
        witnesses.append({"chart": str(index), "exceptional": P.reduce(chart.exceptional).to_str()})
    return witnesses


@dataclass
class KeyLemmaReport:
    disjoint: List[bool]
    bounds_checked: int = 0


def _parse_bound(block: ProductBlock, bound: PolyLike) -> Poly:
    if isinstance(bound, Poly) and bound.ring != block.total.variables:
        raise SignatureMismatch(f"bound {bound} does not live on {block.total}")
    return block.total.poly(bound)


def key_lemma_check(result: AmbientProductResult, bounds: Sequence[PolyLike] = ()) -> KeyLemmaReport:
    """
    The residual divisors D_T - E and D_X - E are disjoint on every chart, and
    every common bound D of D_T and D_X (given on the closed tensor) bounds
    the product divisor too.
    """
    report = KeyLemmaReport([])
    for block in result.blocks:
        for chart in block.charts:
            P = chart.presentation
            if P.is_empty():
                continue
            residual_t = P.in_principal(chart.d_t, chart.exceptional)
            residual_x = P.in_principal(chart.d_x, chart.exceptional)
            if residual_t is None or residual_x is None:
                raise ConstructionInvariantFailed(f"e does not divide d_T and d_X on {P}")
            report.disjoint.append(P.ideal.with_generators([residual_t, residual_x]).is_unit())
            for bound in bounds:
                d = chart.structure.apply(_parse_bound(block, bound))
                if P.in_principal(d, chart.d_t) is None or P.in_principal(d, chart.d_x) is None:
                    continue
                if P.in_principal(d, chart.divisor) is None:
                    raise ConstructionInvariantFailed(f"{d} bounds D_T and D_X but not the product divisor")
                report.bounds_checked += 1
    return report


def interior_comparison(result: AmbientProductResult) -> List[Dict[str, object]]:
    """
    The product agrees with the fibre product of interiors: the closed tensor and
    the raw tensor have the same localization at d_T*d_X, blown-up blocks are
    certified blow-ups in the divisor, and y_oo has the support of d_T*d_X.
    """
    out = []
    for block in result.blocks:
        product = block.d_t * block.d_x
        raw = localize(block.tensor.presentation, product, check=False).presentation
        closed = localize(block.total, product, check=False).presentation
        entry = {"block": (block.x_chart, block.t_chart), "localization": raw.same_as(closed)}
        if block.blown_up and not block.total.is_empty():
            sigma = sigma_blowup(make_pair([(block.total, product)]), [block.center])
            entry["certified"] = sigma.certificate.kind
        same_support = []
        for chart in block.charts:
            P = chart.presentation
            if P.is_empty():
                continue
            pulled = chart.structure.apply(product)
            same_support.append(P.ideal.with_generators([chart.divisor]).radical_contains(pulled)
                                and P.ideal.with_generators([pulled]).radical_contains(chart.divisor))
        entry["support"] = all(same_support)
        out.append(entry)
    return out
