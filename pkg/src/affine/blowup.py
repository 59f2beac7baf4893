"""Affine blow-up charts A[I/a_i] and their gluing along z_j != 0."""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from src.affine.presentation import PolyLike, Presentation
from src.affine.ring_map import Localized, RingMap, localize, verify_localized_inverse
from src.exception import EmptyCenter
from src.exactalg import Ideal, Poly, fresh_variable
from src.logger import logger


@dataclass
class BlowupChart:
    """Chart i: base variables plus one ratio variable z_j = a_j / a_i for every j != i."""

    index: int
    presentation: Presentation
    exceptional: Poly
    ratios: Dict[int, str]
    empty: bool


@dataclass
class Gluing:
    """Chart `source` localized at z_target identified with chart `target` localized at z_source."""

    target: int
    source: int
    local_target: Localized
    local_source: Localized
    iso: RingMap

    @property
    def element(self) -> Poly:
        return self.local_target.element


@dataclass
class BlowupChartSet:
    base: Presentation
    center: Tuple[Poly, ...]
    charts: List[BlowupChart]
    gluings: Dict[Tuple[int, int], Gluing] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.charts)

    def base_map(self, index: int) -> RingMap:
        """Structure map base -> chart `index`."""
        chart = self.charts[index].presentation
        return RingMap(self.base, chart, [g.in_ring(chart.variables) for g in self.base.gens()])

    def nonempty(self) -> List[int]:
        return [chart.index for chart in self.charts if not chart.empty]


def _ratio_names(base: Presentation, count: int) -> List[str]:
    taken = set(base.variables)
    names = []
    for j in range(count):
        name = fresh_variable(f"z{j}", taken)
        taken.add(name)
        names.append(name)
    return names


def _glue(charts: List[BlowupChart], names: List[str], base_vars: Tuple[str, ...], i: int, j: int) -> Gluing:
    chart_i, chart_j = charts[i].presentation, charts[j].presentation
    local_i = localize(chart_i, chart_i.var(names[j]), check=False)
    local_j = localize(chart_j, chart_j.var(names[i]), check=False)
    target = local_i.presentation
    u = local_i.inverse
    images = []
    for name in local_j.presentation.variables:
        if name in base_vars:
            images.append(target.var(name))
        elif name == local_j.unit:
            images.append(target.var(names[j]))
        elif name == names[i]:
            images.append(u)
        else:
            images.append(target.var(name) * u)
    return Gluing(i, j, local_i, local_j, RingMap(local_j.presentation, target, images))


def blowup_charts(presentation: Presentation, center: Sequence[PolyLike]) -> BlowupChartSet:
    """
    Standard charts of the blow-up of Spec(A) along (a_1..a_k).

    Chart i is ((I + <a_i*z_j - a_j : j != i>) : a_i^oo) over the base variables
    plus z_j; charts with the unit ideal are kept and flagged empty.
    """
    center = tuple(presentation.poly(a) for a in center)
    if not center:
        raise EmptyCenter(f"blow-up of {presentation} needs at least one center generator")
    names = _ratio_names(presentation, len(center))
    charts = []
    for i, a_i in enumerate(center):
        ratios = {j: names[j] for j in range(len(center)) if j != i}
        extended = presentation.extend([ratios[j] for j in sorted(ratios)])
        variables = extended.variables
        lifted_i = a_i.in_ring(variables)
        relations = [lifted_i * extended.var(ratios[j]) - center[j].in_ring(variables) for j in sorted(ratios)]
        ideal = extended.ideal.with_generators(relations).saturation(lifted_i)
        chart = Presentation(variables, ideal)
        charts.append(BlowupChart(i, chart, lifted_i, ratios, chart.is_empty()))

    gluings = {}
    for i in range(len(center)):
        for j in range(len(center)):
            if i != j:
                gluings[(i, j)] = _glue(charts, names, presentation.variables, i, j)
    logger.debug(f"blowup: {len(charts)} charts, {sum(c.empty for c in charts)} empty, center {len(center)}")
    return BlowupChartSet(presentation, center, charts, gluings)


def check_gluing(charts: BlowupChartSet, i: int, j: int) -> bool:
    """The (i, j) and (j, i) transition maps are well defined and mutually inverse."""
    forward, backward = charts.gluings[(i, j)].iso, charts.gluings[(j, i)].iso
    if forward.preserved_relations() is not None or backward.preserved_relations() is not None:
        return False
    return verify_localized_inverse(forward, backward)


def strict_transform(charts: BlowupChartSet, ideal: Ideal) -> List[Ideal]:
    """Chart-wise (J + chart ideal) : exceptional^oo for an ideal J of the base."""
    out = []
    for chart in charts.charts:
        variables = chart.presentation.variables
        lifted = [g.in_ring(variables) for g in ideal.generators]
        out.append(chart.presentation.ideal.with_generators(lifted).saturation(chart.exceptional))
    return out
