"""Covering certificates: Zariski (principal opens), finite (monic witnesses) and rqfh trees of both."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

from src.affine import PolyLike, RingMap, kernel, localize
from src.exception import (
    MissingIntegralityWitness,
    NotJointlySurjective,
    NotMinimal,
    NotPrincipalOpen,
)
from src.exactalg import Ideal, Poly, fresh_variable
from src.logger import logger
from src.modpair.morphism import AmbientMorphism, ChartMap
from src.modpair.pair import ModulusPair, make_pair

COVER_KINDS = ("zar", "fin", "rqfh")


@dataclass
class CoverMember:
    """One arrow of a covering family; Zariski members record f, finite members their monic witnesses."""

    morphism: AmbientMorphism
    element: Optional[Poly] = None
    witnesses: Dict[str, Poly] = field(default_factory=dict)
    variable: str = "T"

    @property
    def target_chart(self) -> int:
        return self.morphism.maps[0].target_chart

    @property
    def ring_map(self) -> RingMap:
        return self.morphism.maps[0].ring_map


@dataclass
class RqfhNode:
    """A covering of one kind whose members may be refined further by child nodes (keyed by member index)."""

    kind: str
    members: List[CoverMember]
    children: Dict[int, "RqfhNode"] = field(default_factory=dict)


@dataclass
class CoverVerdict:
    kind: str
    members: int
    witnesses: Dict[str, Any] = field(default_factory=dict)


def principal_open_member(pair: ModulusPair, f: PolyLike, chart: int = 0) -> CoverMember:
    """The inclusion of D(f) into chart `chart`, carrying the restricted divisor."""
    base = pair[chart]
    local = localize(base.presentation, f, check=False)
    source = make_pair([(local.presentation, local.inclusion.apply(base.divisor))])
    return CoverMember(AmbientMorphism(source, pair, [ChartMap(chart, local.inclusion)]), element=local.element)


def witness_variable(morphism: AmbientMorphism, chart: int = 0) -> str:
    return fresh_variable("T", morphism.target[morphism.maps[chart].target_chart].presentation.variables)


def finite_member(morphism: AmbientMorphism, witnesses: Mapping[str, PolyLike]) -> CoverMember:
    """Attach monic witnesses, one per source variable, written in the target variables and T."""
    T = witness_variable(morphism)
    ring = morphism.target[morphism.maps[0].target_chart].presentation.variables + (T,)
    parsed = {name: (Poly.parse(p, ring) if isinstance(p, str) else p) for name, p in witnesses.items()}
    return CoverMember(morphism, witnesses=parsed, variable=T)


def _require_minimal(member: CoverMember, index: int) -> None:
    if len(member.morphism.source) != 1:
        raise NotPrincipalOpen(f"member {index} must have a single source chart")
    if not member.morphism.minimal:
        raise NotMinimal(f"covering member {index} is not minimal")


def is_monic(p: Poly, position: int) -> bool:
    degree = max((e[position] for e in p.terms), default=0)
    if degree < 1:
        return False
    top = {e: c for e, c in p.terms.items() if e[position] == degree}
    return len(top) == 1 and all(sum(e) == degree for e in top) and list(top.values())[0] == 1


def _check_zariski(members: Sequence[CoverMember], target: ModulusPair) -> Dict[str, Any]:
    for index, member in enumerate(members):
        _require_minimal(member, index)
        if member.element is None:
            raise NotPrincipalOpen(f"member {index} does not record a localized element")
        base = target[member.target_chart].presentation
        expected = localize(base, member.element, check=False)
        source = member.morphism.source[0].presentation
        if not source.same_as(expected.presentation) or \
                not member.ring_map.agrees_with(expected.inclusion, source.ideal):
            raise NotPrincipalOpen(f"member {index} is not the inclusion of D({member.element})")
    witnesses = {}
    for k, chart in enumerate(target.charts):
        if chart.empty:
            continue
        elements = [m.element for m in members if m.target_chart == k]
        ideal = chart.presentation.ideal.with_generators(elements)
        cofactors = ideal.membership_with_witness(chart.presentation.one())
        if cofactors is None:
            raise NotJointlySurjective(f"the opens D(f_i) do not cover chart {k}")
        tail = cofactors[len(chart.presentation.ideal.generators):]
        witnesses[f"chart {k}"] = [chart.presentation.reduce(c).to_str() for c in tail]
    return witnesses


def _check_finite(members: Sequence[CoverMember], target: ModulusPair) -> Dict[str, Any]:
    for index, member in enumerate(members):
        _require_minimal(member, index)
        source = member.morphism.source[0].presentation
        base = target[member.target_chart].presentation
        for name in source.variables:
            witness = member.witnesses.get(name)
            if witness is None:
                raise MissingIntegralityWitness(f"member {index} has no monic witness for {name}")
            ring = base.variables + (member.variable,)
            if witness.ring != ring or not is_monic(witness, len(ring) - 1):
                raise MissingIntegralityWitness(f"the witness for {name} in member {index} is not monic in {member.variable}")
            images = list(member.ring_map.images) + [source.var(name)]
            if not source.contains(witness.substitute(images, source.variables)):
                raise MissingIntegralityWitness(f"the witness for {name} in member {index} does not vanish")
    witnesses = {}
    for k, chart in enumerate(target.charts):
        if chart.empty:
            continue
        kernels = [kernel(m.ring_map) for m in members if m.target_chart == k]
        if not kernels:
            raise NotJointlySurjective(f"no member maps to chart {k}")
        meet: Ideal = kernels[0]
        for other in kernels[1:]:
            meet = meet.intersection(other)
        for g in meet.groebner_basis():
            if not chart.presentation.ideal.radical_contains(g):
                raise NotJointlySurjective(f"{g} vanishes on every member but is not nilpotent on chart {k}")
        witnesses[f"chart {k}"] = [g.to_str() for g in meet.groebner_basis()]
    return witnesses


def _check_rqfh(node: RqfhNode, target: ModulusPair, depth: int = 0) -> int:
    if node.kind not in ("zar", "fin"):
        raise NotJointlySurjective(f"rqfh nodes are zar or fin, got {node.kind}")
    check_cover(node.kind, node.members, target)
    deepest = depth
    for index, child in node.children.items():
        deepest = max(deepest, _check_rqfh(child, node.members[index].morphism.source, depth + 1))
    return deepest


def check_cover(kind: str, family, target: Optional[ModulusPair] = None) -> CoverVerdict:
    """
    Verify a covering family of `target`.

    Args:
        kind: zar, fin or rqfh.
        family: a list of CoverMember, or an RqfhNode for rqfh.
        target: the covered pair; defaults to the common target of the members.
    """
    if kind not in COVER_KINDS:
        raise NotJointlySurjective(f"unknown covering kind {kind!r}")
    if kind == "rqfh":
        node: RqfhNode = family
        target = target or node.members[0].morphism.target
        depth = _check_rqfh(node, target)
        return CoverVerdict(kind, len(node.members), {"depth": depth})
    members: List[CoverMember] = list(family)
    if not members:
        raise NotJointlySurjective("an empty family covers nothing")
    target = target or members[0].morphism.target
    for index, member in enumerate(members):
        if member.morphism.target is not target:
            raise NotJointlySurjective(f"member {index} does not map to the covered pair")
    if kind == "zar":
        witnesses = _check_zariski(members, target)
    else:
        witnesses = _check_finite(members, target)
    logger.debug(f"{kind} cover with {len(members)} members verified")
    return CoverVerdict(kind, len(members), witnesses)
