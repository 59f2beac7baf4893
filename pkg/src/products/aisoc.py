"""
Two chart covers of the twisted line over (R, f), compared inside R[1/f][t, 1/t].

The A side is P^1_R with divisor f on the charts R[t], R[1/t, tf] and 1/t on
R[1/t, 1/(ft)]; the C side is the blow-up chart cover R[ft, t], R[ft, 1/t],
R[1/(ft)] with divisors f, f and 1/t. Both are written as subalgebras of one
ambient ring R[q, t, w]/(fq - 1, tw - 1), so equality of subrings and of
divisors reduces to elimination normal forms.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from src.affine import PolyLike, Presentation, subalgebra_member
from src.exception import DivisorIsZero
from src.exactalg import GREVLEX, MonomialOrder, Poly, fresh_variable
from src.logger import logger


@dataclass
class SubringChart:
    name: str
    generators: List[Poly]
    divisor: Poly


@dataclass
class ChartComparison:
    a_side: SubringChart
    c_side: SubringChart
    rings_equal: bool
    divisors_equal: bool
    witnesses: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.rings_equal and self.divisors_equal


@dataclass
class AisoCReport:
    ambient: Presentation
    charts: List[ChartComparison]

    @property
    def passed(self) -> bool:
        return all(chart.passed for chart in self.charts)

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, object]:
        out = {"ambient": self.ambient.to_str(order), "charts": []}
        for chart in self.charts:
            out["charts"].append({
                "A": f"R[{', '.join(g.to_str(order) for g in chart.a_side.generators)}]",
                "C": f"R[{', '.join(g.to_str(order) for g in chart.c_side.generators)}]",
                "divisor": chart.a_side.divisor.to_str(order),
                "rings": chart.rings_equal,
                "divisors": chart.divisors_equal,
            })
        return out


def _ambient(R: Presentation, f: Poly):
    taken = set(R.variables)
    names = []
    for base in ("q", "t", "w"):
        name = fresh_variable(base, taken)
        taken.add(name)
        names.append(name)
    ambient = R.extend(names)
    q, t, w = (ambient.var(name) for name in names)
    f = f.in_ring(ambient.variables)
    ambient = ambient.with_relations([f * q - 1, t * w - 1])
    return ambient, names, q, t, w, f


def _contained(ambient: Presentation, keep: Sequence[str], generators: List[Poly], others: List[Poly]) -> bool:
    return all(subalgebra_member(ambient, generators, h, keep) is not None for h in others)


def _same_divisor(ambient: Presentation, keep: Sequence[str], chart: SubringChart, other: Poly) -> Optional[str]:
    """The ratio other / divisor when it is a unit of the chart subring."""
    inverse = ambient.inverse(chart.divisor)
    other_inverse = ambient.inverse(other)
    if inverse is None or other_inverse is None:
        return None
    ratio = ambient.reduce(other * inverse)
    back = ambient.reduce(chart.divisor * other_inverse)
    if subalgebra_member(ambient, chart.generators, ratio, keep) is None or \
            subalgebra_member(ambient, chart.generators, back, keep) is None:
        return None
    return ratio.to_str()


def build_AisoC(R: Presentation, f: PolyLike) -> AisoCReport:
    """Build both chart covers over (R, f) and compare them chart by chart."""
    f = R.poly(f)
    if R.contains(f) or not R.is_nonzerodivisor(f):
        raise DivisorIsZero(f"{f} is not a nonzerodivisor on {R}")
    ambient, names, q, t, w, f_up = _ambient(R, f)
    keep = R.variables
    ft = f_up * t
    one_over_ft = q * w
    a_side = [
        SubringChart("R[t]", [t], f_up),
        SubringChart("R[1/t, tf]", [w, ft], f_up),
        SubringChart("R[1/t, 1/(ft)]", [w, one_over_ft], w),
    ]
    c_side = [
        SubringChart("R[ft, t]", [ft, t], f_up),
        SubringChart("R[ft, 1/t]", [ft, w], f_up),
        SubringChart("R[1/(ft)]", [one_over_ft], w),
    ]
    charts = []
    for a, c in zip(a_side, c_side):
        rings_equal = _contained(ambient, keep, a.generators, c.generators) and \
            _contained(ambient, keep, c.generators, a.generators)
        ratio = _same_divisor(ambient, keep, a, c.divisor) if rings_equal else None
        witnesses = {"A": a.name, "C": c.name}
        if ratio is not None:
            witnesses["unit"] = ratio
        charts.append(ChartComparison(a, c, rings_equal, ratio is not None, witnesses))
    report = AisoCReport(ambient, charts)
    logger.debug(f"A vs C over {R} with f = {f}: {'equal' if report.passed else 'different'}")
    return report
