"""Roofs X <-s- X' -g-> Y: morphisms of the localized category, composed through Ore squares."""

from dataclasses import dataclass
from typing import Dict

from src.exception import SignatureMismatch
from src.exactalg import GREVLEX, MonomialOrder
from src.logger import logger
from src.modpair import (
    AmbientMorphism,
    CertifiedSigma,
    ModulusPair,
    compose,
    compose_sigmas,
    equal_on_interior,
    identity,
    identity_sigma,
    same_pair,
)
from src.msch.ore import ore_complete


@dataclass
class Roof:
    sigma: CertifiedSigma
    morphism: AmbientMorphism

    def __post_init__(self):
        if not same_pair(self.sigma.source, self.morphism.source):
            raise SignatureMismatch("both legs of a roof must start at the apex")

    @property
    def apex(self) -> ModulusPair:
        return self.sigma.source

    @property
    def source(self) -> ModulusPair:
        return self.sigma.target

    @property
    def target(self) -> ModulusPair:
        return self.morphism.target

    @classmethod
    def from_morphism(cls, f: AmbientMorphism) -> "Roof":
        """f with the trivial blow-up as its left leg."""
        sigma = identity_sigma(f.source)
        return cls(sigma, compose(sigma.morphism, f))

    @classmethod
    def inverse_of(cls, s: CertifiedSigma) -> "Roof":
        """s^-1 : X => X', represented by (s, id)."""
        return cls(s, identity(s.source))

    def describe(self, order: MonomialOrder = GREVLEX) -> Dict[str, object]:
        return {"sigma": self.sigma.describe(), "map": self.morphism.describe(order)}


def identity_roof(pair: ModulusPair) -> Roof:
    return Roof.from_morphism(identity(pair))


def compose_roofs(first: Roof, second: Roof) -> Roof:
    """second ∘ first: complete second's blow-up leg against first's map, then compose both legs."""
    if not same_pair(first.target, second.source):
        raise SignatureMismatch("composable roofs must share the middle pair")
    square = ore_complete(second.sigma, first.morphism)
    sigma = compose_sigmas([first.sigma, square.t])
    logger.debug(f"composed roofs through an apex with {len(sigma.source)} charts")
    return Roof(sigma, compose(square.morphism, second.morphism))


def roofs_equal(first: Roof, second: Roof) -> bool:
    """Equal iff the maps agree over the interior of a common refinement of the two apexes."""
    if len(first.source) != len(second.source) or len(first.target) != len(second.target):
        raise SignatureMismatch("compared roofs must share source and target")
    square = ore_complete(second.sigma, first.sigma.morphism)
    return equal_on_interior(compose(square.t.morphism, first.morphism),
                             compose(square.morphism, second.morphism))
