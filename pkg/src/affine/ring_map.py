"""Ring maps between presentations, localizations, tensor products and kernels."""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from src.affine.presentation import PolyLike, Presentation
from src.exception import DivisorIsZero, RelationNotPreserved, SignatureMismatch
from src.exactalg import GREVLEX, Ideal, MonomialOrder, Poly, fresh_variable
from src.logger import logger


class RingMap:
    """
    A Q-algebra map source -> target, given by one target element per source variable.

    Construct through `make_ring_map` to have the relations of the source checked.
    Geometrically this is the morphism Spec(target) -> Spec(source).
    """

    def __init__(self, source: Presentation, target: Presentation, images: Sequence[Poly]):
        if len(images) != len(source.variables):
            raise SignatureMismatch(
                f"{len(images)} images given for the {len(source.variables)} variables of {source}")
        self.source = source
        self.target = target
        self.images: Tuple[Poly, ...] = tuple(target.poly(image) for image in images)

    @classmethod
    def identity(cls, presentation: Presentation) -> "RingMap":
        return cls(presentation, presentation, presentation.gens())

    def image(self, name: str) -> Poly:
        return self.images[self.source.variables.index(name)]

    def apply(self, f: PolyLike) -> Poly:
        return self.source.poly(f).substitute(self.images, self.target.variables)

    def then(self, after: "RingMap") -> "RingMap":
        """The composite source -> after.target (first self, then `after`)."""
        if after.source.variables != self.target.variables:
            raise SignatureMismatch(f"cannot compose: {self.target} is not the source {after.source}")
        return RingMap(self.source, after.target, [after.apply(image) for image in self.images])

    def agrees_with(self, other: "RingMap", ideal: Optional[Ideal] = None) -> bool:
        """Images agree modulo `ideal` (the target ideal by default)."""
        ideal = ideal if ideal is not None else self.target.ideal
        return all(ideal.contains(a - b) for a, b in zip(self.images, other.images))

    def preserved_relations(self) -> Optional[int]:
        """Index of the first source relation not sent into the target ideal, or None."""
        for index, relation in enumerate(self.source.ideal.generators):
            if not self.target.contains(self.apply(relation)):
                return index
        return None

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        return ", ".join(f"{name} -> {image.to_str(order)}" for name, image in zip(self.source.variables, self.images))

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RingMap({self.source} -> {self.target}: {self.to_str()})"


def make_ring_map(source: Presentation, target: Presentation, images: Sequence[PolyLike]) -> RingMap:
    """A checked ring map; raises RelationNotPreserved naming the first violated relation."""
    ring_map = RingMap(source, target, [target.poly(image) for image in images])
    index = ring_map.preserved_relations()
    if index is not None:
        raise RelationNotPreserved(index, source.ideal.generators[index].to_str())
    return ring_map


@dataclass
class Localized:
    """P[u]/(I + <u*f - 1>) together with its structure map from P."""

    presentation: Presentation
    unit: str
    element: Poly
    inclusion: RingMap

    @property
    def inverse(self) -> Poly:
        return self.presentation.var(self.unit)


def localize(presentation: Presentation, f: PolyLike, name: str = "u", check: bool = True) -> Localized:
    """Adjoin an inverse of f; with `check` a nonempty ring must not have f = 0."""
    f = presentation.poly(f)
    if check and presentation.contains(f) and not presentation.is_empty():
        raise DivisorIsZero(f"{f} is zero in {presentation}")
    unit = fresh_variable(name, presentation.variables)
    extended = presentation.extend([unit])
    u = extended.var(unit)
    localized = extended.with_relations([u * f.in_ring(extended.variables) - 1])
    inclusion = RingMap(presentation, localized, [g.in_ring(localized.variables) for g in presentation.gens()])
    return Localized(localized, unit, f, inclusion)


def closure_of_principal_open(presentation: Presentation, f: PolyLike) -> Presentation:
    """Scheme-theoretic closure of D(f): the ideal becomes I : f^oo."""
    return presentation.saturate(f)


def rename_apart(variables: Sequence[str], taken: Sequence[str]) -> Dict[str, str]:
    """A renaming of `variables` avoiding `taken` (unchanged names where possible)."""
    used = set(taken)
    mapping = {}
    for name in variables:
        new = fresh_variable(name, used)
        used.add(new)
        mapping[name] = new
    return mapping


@dataclass
class TensorProduct:
    presentation: Presentation
    left: RingMap
    right: RingMap
    renaming: Dict[str, str]


def tensor_over(base: Presentation, left: RingMap, right: RingMap) -> TensorProduct:
    """left.target ⊗_base right.target with its two coprojections; right variables are renamed on clashes."""
    for side in (left, right):
        if side.source.variables != base.variables:
            raise SignatureMismatch(f"{side.source} is not the common base {base}")
    L, R = left.target, right.target
    renaming = rename_apart(R.variables, L.variables)
    variables = L.variables + tuple(renaming[v] for v in R.variables)
    relations = [g.in_ring(variables) for g in L.ideal.generators]
    relations += [g.rename(renaming).in_ring(variables) for g in R.ideal.generators]
    for a, b in zip(left.images, right.images):
        relations.append(a.in_ring(variables) - b.rename(renaming).in_ring(variables))
    presentation = Presentation(variables, Ideal(variables, relations))
    to_left = RingMap(L, presentation, [g.in_ring(variables) for g in L.gens()])
    to_right = RingMap(R, presentation, [g.rename(renaming).in_ring(variables) for g in R.gens()])
    return TensorProduct(presentation, to_left, to_right, renaming)


def kernel(ring_map: RingMap) -> Ideal:
    """ker(source -> target) as an ideal of the source polynomial ring (contains the source relations)."""
    source, target = ring_map.source, ring_map.target
    renaming = rename_apart(target.variables, source.variables)
    target_vars = tuple(renaming[v] for v in target.variables)
    variables = target_vars + source.variables
    relations = [g.rename(renaming).in_ring(variables) for g in target.ideal.generators]
    for name, image in zip(source.variables, ring_map.images):
        relations.append(Poly.variable(variables, name) - image.rename(renaming).in_ring(variables))
    result = Ideal(variables, relations).elimination(target_vars)
    logger.debug(f"kernel: {len(result.generators)} generators over {source.variables}")
    return result


def verify_localized_inverse(forward: RingMap, backward: RingMap) -> bool:
    """True iff the two maps are mutually inverse ring isomorphisms."""
    there_and_back = forward.then(backward)
    back_and_there = backward.then(forward)
    return there_and_back.agrees_with(RingMap.identity(forward.source)) and \
        back_and_there.agrees_with(RingMap.identity(forward.target))


def subalgebra_member(presentation: Presentation, generators: Sequence[PolyLike], h: PolyLike,
                      keep: Sequence[str] = ()) -> Optional[Poly]:
    """
    Express h through `generators` and the `keep` variables, or return None.

    Works in the ring of `presentation` with tags y_i = generators[i]; the other
    variables are eliminated first, so a normal form free of them is a witness.
    """
    generators = [presentation.poly(g) for g in generators]
    drop = [v for v in presentation.variables if v not in set(keep)]
    taken = set(presentation.variables)
    tags = []
    for _ in generators:
        name = fresh_variable("y", taken)
        taken.add(name)
        tags.append(name)
    kept = [v for v in presentation.variables if v in set(keep)]
    ring = tuple(drop) + tuple(kept) + tuple(tags)
    relations = [g.in_ring(ring) for g in presentation.ideal.generators]
    relations += [Poly.variable(ring, tag) - g.in_ring(ring) for tag, g in zip(tags, generators)]
    ideal = Ideal(ring, relations)
    remainder = presentation.poly(h).in_ring(ring)
    if drop:
        remainder = ideal.normal_form(remainder, MonomialOrder.elimination(len(drop)))
    else:
        remainder = ideal.normal_form(remainder)
    if set(remainder.support()) & set(drop):
        return None
    return remainder
