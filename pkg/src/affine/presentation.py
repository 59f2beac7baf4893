"""Finitely presented Q-algebras Q[x1..xn]/I."""

from typing import Iterable, List, Optional, Sequence, Union

from src.exception import SignatureMismatch
from src.exactalg import GREVLEX, Ideal, MonomialOrder, Poly

PolyLike = Union[Poly, str, int]


class Presentation:
    """
    The ring Q[variables] / ideal.

    The unit ideal is allowed and stands for the empty scheme; `is_empty`
    reports it so callers can keep such charts without special casing.
    """

    def __init__(self, variables: Sequence[str], ideal: Optional[Ideal] = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise SignatureMismatch(f"repeated variable in {self.variables}")
        if ideal is None:
            ideal = Ideal.zero(self.variables)
        if ideal.ring != self.variables:
            raise SignatureMismatch(f"ideal ring {ideal.ring} does not match variables {self.variables}")
        self.ideal = ideal

    @classmethod
    def parse(cls, variables: Sequence[str], relations: Iterable[str] = ()) -> "Presentation":
        variables = tuple(variables)
        return cls(variables, Ideal.parse(list(relations), variables))

    @classmethod
    def point(cls) -> "Presentation":
        """Spec Q."""
        return cls(())

    @property
    def ring(self):
        return self.variables

    # ---------- elements ----------
    def poly(self, value: PolyLike) -> Poly:
        if isinstance(value, Poly):
            if value.ring != self.variables:
                raise SignatureMismatch(f"element ring {value.ring} does not match {self.variables}")
            return value
        if isinstance(value, str):
            return Poly.parse(value, self.variables)
        return Poly.constant(self.variables, value)

    def var(self, name: str) -> Poly:
        return Poly.variable(self.variables, name)

    def gens(self) -> List[Poly]:
        return Poly.variables(self.variables)

    def one(self) -> Poly:
        return Poly.one(self.variables)

    def zero(self) -> Poly:
        return Poly.zero(self.variables)

    # ---------- membership ----------
    def is_empty(self) -> bool:
        return self.ideal.is_unit()

    def contains(self, f: PolyLike) -> bool:
        """True iff f is zero in this ring."""
        return self.ideal.contains(self.poly(f))

    def equal_mod(self, f: PolyLike, g: PolyLike) -> bool:
        return self.contains(self.poly(f) - self.poly(g))

    def reduce(self, f: PolyLike, order: MonomialOrder = GREVLEX) -> Poly:
        return self.ideal.normal_form(self.poly(f), order)

    def in_principal(self, f: PolyLike, g: PolyLike) -> Optional[Poly]:
        """A cofactor c with f = c*g in this ring, or None when f is not in <g>."""
        cofactors = self.ideal.with_generators([self.poly(g)]).membership_with_witness(self.poly(f))
        if cofactors is None:
            return None
        return self.reduce(cofactors[-1])

    def inverse(self, e: PolyLike) -> Optional[Poly]:
        """The inverse of e when e is a unit of this ring."""
        return self.in_principal(1, e)

    def is_unit(self, e: PolyLike) -> bool:
        return self.inverse(e) is not None

    def is_nonzerodivisor(self, f: PolyLike) -> bool:
        return self.ideal.is_nonzerodivisor(self.poly(f))

    # ---------- derived presentations ----------
    def with_relations(self, extra: Iterable[PolyLike]) -> "Presentation":
        return Presentation(self.variables, self.ideal.with_generators([self.poly(f) for f in extra]))

    def saturate(self, f: PolyLike) -> "Presentation":
        return Presentation(self.variables, self.ideal.saturation(self.poly(f)))

    def extend(self, names: Sequence[str]) -> "Presentation":
        """Adjoin free variables."""
        variables = self.variables + tuple(names)
        return Presentation(variables, self.ideal.in_ring(variables))

    def same_as(self, other: "Presentation") -> bool:
        return self.variables == other.variables and self.ideal.equal(other.ideal)

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        head = "Q[" + ", ".join(self.variables) + "]" if self.variables else "Q"
        if self.ideal.is_zero():
            return head
        return f"{head} / {self.ideal.to_str(order)}"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Presentation({self.to_str()})"
