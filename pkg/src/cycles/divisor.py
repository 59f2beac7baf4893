"""Effective Cartier divisors on one affine ring: comparison, intersection and the DDH identity."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.affine import PolyLike, Presentation
from src.exception import DivisorIsZero, IntersectionNotCartier, SignatureMismatch
from src.exactalg import GREVLEX, Ideal, MonomialOrder, Poly
from src.logger import logger


@dataclass
class DivisorOnRing:
    presentation: Presentation
    generator: Poly

    @property
    def ideal(self) -> Ideal:
        """<d> + I in the polynomial ring."""
        return self.presentation.ideal.with_generators([self.generator])

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        return f"({self.presentation.reduce(self.generator, order).to_str(order)}) on {self.presentation.to_str(order)}"

    def __str__(self) -> str:
        return self.to_str()


def make_divisor(presentation: Presentation, generator: PolyLike) -> DivisorOnRing:
    d = presentation.poly(generator)
    if not presentation.is_nonzerodivisor(d) or presentation.contains(d):
        raise DivisorIsZero(f"{d} is not a nonzerodivisor on {presentation}")
    return DivisorOnRing(presentation, d)


def _same_ring(*divisors: DivisorOnRing) -> Presentation:
    ring = divisors[0].presentation
    for other in divisors[1:]:
        if not ring.same_as(other.presentation):
            raise SignatureMismatch(f"divisors live on different rings: {ring} and {other.presentation}")
    return ring


@dataclass
class DivisorComparison:
    """D1 >= D2 with the cofactor c such that d1 = c * d2 in the ring."""

    holds: bool
    cofactor: Optional[Poly] = None

    def __bool__(self) -> bool:
        return self.holds


def divisor_geq(first: DivisorOnRing, second: DivisorOnRing) -> DivisorComparison:
    ring = _same_ring(first, second)
    cofactor = ring.in_principal(first.generator, second.generator)
    return DivisorComparison(cofactor is not None, cofactor)


def principal_generator(ring: Presentation, members: List[Poly]) -> Optional[Poly]:
    """
    A single e with <members> + I = <e> + I, or None when no candidate is found.

    Candidates are the members themselves and the elements of the reduced basis
    of <members> + I that are not already zero in the ring.
    """
    J = ring.ideal.with_generators(members)
    candidates = list(members) + [g for g in J.groebner_basis() if not ring.contains(g)]
    if J.is_unit():
        candidates.insert(0, ring.one())
    for e in candidates:
        if all(ring.in_principal(m, e) is not None for m in members) and J.contains(e):
            return ring.reduce(e)
    return None


def intersection_divisor(first: DivisorOnRing, second: DivisorOnRing) -> DivisorOnRing:
    """E = D1 x_X D2 when <d1, d2> + I is principal."""
    ring = _same_ring(first, second)
    e = principal_generator(ring, [first.generator, second.generator])
    if e is None:
        raise IntersectionNotCartier(
            f"<{first.generator}, {second.generator}> is not principal on {ring}")
    return DivisorOnRing(ring, e)


def _mutual(ring: Presentation, a: Poly, b: Poly) -> bool:
    return ring.in_principal(a, b) is not None and ring.in_principal(b, a) is not None


@dataclass
class RephrasingReport:
    intersection: DivisorOnRing
    intersection_is_second: bool
    geq: DivisorComparison

    @property
    def equivalent(self) -> bool:
        return self.intersection_is_second == self.geq.holds

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, object]:
        out = {
            "E": self.intersection.generator.to_str(order),
            "E = D2": self.intersection_is_second,
            "D1 >= D2": self.geq.holds,
        }
        if self.geq.cofactor is not None:
            out["cofactor"] = self.geq.cofactor.to_str(order)
        return out


def rephrasing_check(first: DivisorOnRing, second: DivisorOnRing) -> RephrasingReport:
    """E = D2 and D1 >= D2 are decided separately; the report says whether they agree."""
    ring = _same_ring(first, second)
    E = intersection_divisor(first, second)
    report = RephrasingReport(E, _mutual(ring, E.generator, second.generator), divisor_geq(first, second))
    logger.debug(f"rephrasing: E = {E.generator}, equivalent = {report.equivalent}")
    return report


@dataclass
class DDHReport:
    intersection: DivisorOnRing
    holds: bool
    witnesses: Dict[str, List[str]] = field(default_factory=dict)

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, object]:
        return {"E": self.intersection.generator.to_str(order), "holds": self.holds, **self.witnesses}


def ddh_check(first: DivisorOnRing, second: DivisorOnRing, extra: DivisorOnRing) -> DDHReport:
    """(D1 + H) x_X (D2 + H) = E + H, as <d1*h, d2*h> + I = <e*h> + I."""
    ring = _same_ring(first, second, extra)
    E = intersection_divisor(first, second)
    h = extra.generator
    left = ring.ideal.with_generators([first.generator * h, second.generator * h])
    right = ring.ideal.with_generators([E.generator * h])
    holds = left.equal(right)
    witnesses = {}
    cofactors = left.membership_with_witness(E.generator * h)
    if cofactors is not None:
        tail = cofactors[len(ring.ideal.generators):]
        witnesses["e*h"] = [ring.reduce(c).to_str() for c in tail]
    logger.debug(f"ddh: e = {E.generator}, h = {h}, holds = {holds}")
    return DDHReport(E, holds, witnesses)
