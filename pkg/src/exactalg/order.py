"""Monomial orders on exponent tuples.

Every order is exposed through a sort key: a larger key means a larger
monomial, so the leading monomial of a term set is ``max(terms, key=order.key)``.
"""

from dataclasses import dataclass
from typing import Callable, Tuple

Exponent = Tuple[int, ...]


def _grevlex_key(e: Exponent):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """`kind` is one of lex, grevlex, elim; `block` is the size of the eliminated first block."""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("an elimination order needs a nonempty first block")

    @classmethod
    def named(cls, name: str) -> "MonomialOrder":
        return cls(kind=name)

    @classmethod
    def elimination(cls, block: int) -> "MonomialOrder":
        return cls(kind="elim", block=block)

    @property
    def key(self) -> Callable[[Exponent], tuple]:
        if self.kind == "lex":
            return tuple
        if self.kind == "grevlex":
            return _grevlex_key
        k = self.block

        def elim_key(e: Exponent):
            return (_grevlex_key(e[:k]), _grevlex_key(e[k:]))

        return elim_key

    def __str__(self) -> str:
        return f"elim({self.block})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")
