"""
(Y x_X Z) ⊠_S T against (Y ⊠_S T) x_{X ⊠_S T} (Z ⊠_S T).

Both sides are built. On every chart of the left side the divisor F cut out by
the two box factors must equal E + T_oo - S_oo, i.e.

    <y*h_T, z*h_T> + I = <e*h_T> + I        (h_T = t/s),

and the divisor generators of the two sides must agree up to units. The closed
fibre products of both sides are then compared over the interior by an explicit
pair of inverse ring maps.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.affine import Presentation, RingMap, localize, tensor_over, verify_localized_inverse
from src.exception import NotAdmissible, SignatureMismatch
from src.exactalg import Poly
from src.logger import logger
from src.modpair import AmbientMorphism, compose, identity, same_pair
from src.products.ambient import AmbientProductResult, ProductBlock, ambient_product
from src.products.box import BoxProductResult, box_map, box_product


@dataclass
class TensorFiberReport:
    left: BoxProductResult
    right: AmbientProductResult
    claim: List[bool] = field(default_factory=list)
    divisors: List[bool] = field(default_factory=list)
    interiors: List[bool] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.claim) and all(self.divisors) and all(self.interiors)

    def describe(self) -> Dict[str, object]:
        return {
            "left charts": len(self.left.pair),
            "right charts": len(self.right.pair),
            "claim": self.claim,
            "divisors": self.divisors,
            "interiors": self.interiors,
        }


def _mutually_divide(P: Presentation, a: Poly, b: Poly) -> bool:
    return P.in_principal(a, b) is not None and P.in_principal(b, a) is not None


def _claim_on_left(fibre: AmbientProductResult, left: BoxProductResult, h: AmbientMorphism, report: TensorFiberReport):
    pieces = fibre.chart_data()
    for block in left.blocks:
        P = block.total
        if P.is_empty():
            continue
        piece = pieces[block.x_chart]
        cofactor = h.verdicts[block.t_chart].admissible_cofactor
        if cofactor is None:
            raise NotAdmissible(block.t_chart, "T -> S must be admissible")
        h_t = block.tensor.right.apply(cofactor)
        y = block.tensor.left.apply(piece.d_x)
        z = block.tensor.left.apply(piece.d_t)
        e = block.tensor.left.apply(piece.exceptional)
        spanned = P.ideal.with_generators([y * h_t, z * h_t])
        report.claim.append(spanned.equal(P.ideal.with_generators([e * h_t])))
        expected = P.in_principal(y * z * h_t, e)
        report.divisors.append(expected is not None and _mutually_divide(P, expected, block.divisor))


def _interior_match(fibre_block: ProductBlock, t_chart: int, base_map: RingMap, h: AmbientMorphism,
                    yt: BoxProductResult, zt: BoxProductResult, right: AmbientProductResult) -> bool:
    """The closed tensors of both sides agree after inverting all divisors."""
    S = base_map.source
    total = fibre_block.total
    to_w = RingMap(S, total, [fibre_block.tensor.left.apply(image) for image in base_map.images])
    lt = tensor_over(S, to_w, h.maps[t_chart].ring_map)
    p = yt.block_index(fibre_block.x_chart, t_chart)
    q = zt.block_index(fibre_block.t_chart, t_chart)
    rb = right.block(p, q)
    y_block, z_block = yt.blocks[p], zt.blocks[q]

    left_element = lt.left.apply(fibre_block.d_x * fibre_block.d_t) * lt.right.apply(h.source[t_chart].divisor)
    L = localize(lt.presentation.saturate(left_element), left_element, check=False)
    R = localize(rb.total, rb.d_x * rb.d_t, check=False)
    Lp, Rp = L.presentation, R.presentation

    names_y = y_block.tensor.left.source.variables
    names_z = z_block.tensor.left.source.variables
    names_t = h.source[t_chart].presentation.variables
    fw = fibre_block.tensor.renaming
    forward: Dict[str, Poly] = {}
    backward: Dict[str, Poly] = {}
    for v in names_y:
        forward[v] = Lp.var(v)
        backward[v] = Rp.var(v)
    for v in names_z:
        forward[rb.tensor.renaming[v]] = Lp.var(fw[v])
        backward[fw[v]] = Rp.var(rb.tensor.renaming[v])
    for v in names_t:
        forward[y_block.tensor.renaming[v]] = Lp.var(lt.renaming[v])
        forward[rb.tensor.renaming[z_block.tensor.renaming[v]]] = Lp.var(lt.renaming[v])
        backward[lt.renaming[v]] = Rp.var(y_block.tensor.renaming[v])

    r_images = [forward[v] for v in rb.total.variables]
    r_unit = Lp.inverse(R.element.substitute(r_images, Lp.variables))
    l_images = [backward[v] for v in lt.presentation.variables]
    l_unit = Rp.inverse(L.element.substitute(l_images, Rp.variables))
    if r_unit is None or l_unit is None:
        return False
    to_left = RingMap(Rp, Lp, r_images + [r_unit])
    to_right = RingMap(Lp, Rp, l_images + [l_unit])
    if to_left.preserved_relations() is not None or to_right.preserved_relations() is not None:
        return False
    return verify_localized_inverse(to_left, to_right)


def tensor_fiber_check(f: AmbientMorphism, g: AmbientMorphism, h: AmbientMorphism,
                       base: Optional[AmbientMorphism] = None) -> TensorFiberReport:
    """
    f: Y -> X, g: Z -> X, h: T -> S and base: X -> S (the identity of X when X = S).
    """
    base = base if base is not None else identity(f.target)
    if not same_pair(f.target, g.target) or not same_pair(f.target, base.source):
        raise SignatureMismatch("Y and Z must map to the same X, which must map to S")
    if not same_pair(base.target, h.target):
        raise SignatureMismatch("T must map to the base of X")
    fibre = ambient_product(f, g)
    to_base = compose(fibre.proj_x, compose(f, base))
    left = box_product(to_base, h)

    yt = box_product(compose(f, base), h)
    zt = box_product(compose(g, base), h)
    xt = box_product(base, h)
    right = ambient_product(box_map(yt, xt, f), box_map(zt, xt, g))

    report = TensorFiberReport(left, right)
    _claim_on_left(fibre, left, h, report)
    for block in fibre.blocks:
        if block.total.is_empty():
            continue
        x_chart = f.maps[block.x_chart].target_chart
        base_map = base.maps[x_chart].ring_map
        to_x = f.maps[block.x_chart].ring_map
        # S -> Y_i through X, as seen from the closed fibre product
        s_to_y = base_map.then(to_x)
        for t_chart in range(len(h.source)):
            report.interiors.append(_interior_match(block, t_chart, s_to_y, h, yt, zt, right))
    logger.debug(f"tensor-fiber: {len(left.pair)} left charts, {len(right.pair)} right charts, passed={report.passed}")
    return report
