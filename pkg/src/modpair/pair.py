"""Modulus pairs: charts with a Cartier divisor generator, glued along principal opens."""

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from src.affine import Gluing, Localized, PolyLike, Presentation, localize
from src.exception import DivisorNotCartier, GluingMismatch
from src.exactalg import GREVLEX, Ideal, MonomialOrder, Poly
from src.logger import logger


@dataclass
class Chart:
    presentation: Presentation
    divisor: Poly
    # I : g, equal to I once make_pair has checked the chart
    nonzerodivisor_witness: Optional[Ideal] = None

    @property
    def empty(self) -> bool:
        return self.presentation.is_empty()

    @cached_property
    def interior(self) -> Localized:
        """D(divisor) on this chart; a unit divisor gives the chart back with an adjoined inverse."""
        return localize(self.presentation, self.divisor, check=False)

    @cached_property
    def dense_ideal(self):
        """I : g^oo, the closure of the interior."""
        return self.presentation.ideal.saturation(self.divisor)

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, str]:
        return {
            "ring": self.presentation.to_str(order),
            "divisor": self.presentation.reduce(self.divisor, order).to_str(order),
        }


class ModulusPair:
    """
    A finite list of affine charts (X̄_i, g_i) with gluing data.

    Build through `make_pair`, which verifies that each g_i is a nonzerodivisor
    and that divisor generators agree up to units on every overlap.
    """

    def __init__(self, charts: Sequence[Chart], gluings: Optional[Dict[Tuple[int, int], Gluing]] = None):
        self.charts: List[Chart] = list(charts)
        self.gluings: Dict[Tuple[int, int], Gluing] = dict(gluings or {})

    def __len__(self) -> int:
        return len(self.charts)

    def __getitem__(self, index: int) -> Chart:
        return self.charts[index]

    @property
    def single(self) -> bool:
        return len(self.charts) == 1

    def is_empty(self) -> bool:
        return all(chart.empty for chart in self.charts)

    @property
    def witnesses(self) -> List[Optional[Ideal]]:
        return [chart.nonzerodivisor_witness for chart in self.charts]

    def describe(self, order: MonomialOrder = GREVLEX) -> List[Dict[str, str]]:
        return [chart.describe(order) for chart in self.charts]

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        lines = ["pair {"]
        for chart in self.charts:
            info = chart.describe(order)
            lines += ["  chart {", f"    ring {info['ring']};", f"    divisor {info['divisor']};", "  }"]
        lines.append("}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_str()


def _check_cartier(index: int, chart: Chart) -> Optional[Ideal]:
    if chart.empty:
        return None
    ideal = chart.presentation.ideal
    colon = ideal.colon(chart.divisor)
    if not colon.equal(ideal):
        raise DivisorNotCartier(index, f"{chart.divisor} is a zero divisor on {chart.presentation}")
    return colon


def _check_gluing(key: Tuple[int, int], gluing: Gluing, charts: List[Chart]) -> None:
    i, j = key
    local = gluing.local_target.presentation
    mine = charts[i].divisor.in_ring(local.variables)
    theirs = gluing.iso.apply(charts[j].divisor.in_ring(gluing.iso.source.variables))
    if local.in_principal(mine, theirs) is None or local.in_principal(theirs, mine) is None:
        raise GluingMismatch(f"divisors of charts {i} and {j} differ by a non-unit on the overlap")


def make_pair(charts: Sequence[Tuple[Presentation, PolyLike]],
              gluings: Optional[Dict[Tuple[int, int], Gluing]] = None) -> ModulusPair:
    built = [Chart(presentation, presentation.poly(divisor)) for presentation, divisor in charts]
    for index, chart in enumerate(built):
        chart.nonzerodivisor_witness = _check_cartier(index, chart)
    for key, gluing in (gluings or {}).items():
        _check_gluing(key, gluing, built)
    logger.debug(f"make_pair: {len(built)} charts, {len(gluings or {})} gluings")
    return ModulusPair(built, gluings)


def interior(pair: ModulusPair) -> List[Localized]:
    return [chart.interior for chart in pair.charts]


def shift_gluings(gluings: Dict[Tuple[int, int], Gluing], offset: int) -> Dict[Tuple[int, int], Gluing]:
    return {
        (i + offset, j + offset): replace(gluing, target=gluing.target + offset, source=gluing.source + offset)
        for (i, j), gluing in gluings.items()
    }


def coproduct(*pairs: ModulusPair, drop_empty: bool = True) -> ModulusPair:
    """Disjoint union: charts concatenated in order, gluings shifted; all-empty summands are dropped unless asked."""
    kept = list(pairs)
    if drop_empty:
        kept = [pair for pair in pairs if not pair.is_empty()] or list(pairs[:1])
    charts: List[Chart] = []
    gluings: Dict[Tuple[int, int], Gluing] = {}
    for pair in kept:
        gluings.update(shift_gluings(pair.gluings, len(charts)))
        charts.extend(pair.charts)
    return ModulusPair(charts, gluings)


def rescale_divisor(pair: ModulusPair, units: Sequence[PolyLike]) -> ModulusPair:
    """Multiply each divisor generator by a unit of its chart; the divisor itself is unchanged."""
    charts = []
    for index, (chart, unit) in enumerate(zip(pair.charts, units)):
        unit = chart.presentation.poly(unit)
        if not chart.empty and not chart.presentation.is_unit(unit):
            raise DivisorNotCartier(index, f"{unit} is not a unit on {chart.presentation}")
        charts.append(Chart(chart.presentation, chart.divisor * unit))
    return make_pair([(c.presentation, c.divisor) for c in charts], pair.gluings)
