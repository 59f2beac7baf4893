"""Sparse multivariate polynomials with exact rational coefficients."""

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from src.exception import NotDivisible, SignatureMismatch
from src.exactalg.order import GREVLEX, Exponent, MonomialOrder

Ring = Tuple[str, ...]
Coefficient = Union[int, Fraction]


def fresh_variable(base: str, taken: Iterable[str]) -> str:
    """First of base, base1, base2, ... not in `taken`."""
    taken = set(taken)
    if base not in taken:
        return base
    index = 1
    while f"{base}{index}" in taken:
        index += 1
    return f"{base}{index}"


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def format_monomial(ring: Ring, e: Exponent) -> str:
    parts = []
    for name, power in zip(ring, e):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{power}")
    return "*".join(parts)


class Poly:
    """
    An element of Q[ring]. Terms map exponent tuples to nonzero Fractions.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Sequence[str], terms: Optional[Mapping[Exponent, Coefficient]] = None):
        self.ring: Ring = tuple(ring)
        clean: Dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.ring):
                raise SignatureMismatch(f"exponent {e} does not fit ring {self.ring}")
            if c:
                clean[tuple(e)] = Fraction(c)
        self.terms = clean
        self._hash = None

    # ---------- constructors ----------
    @classmethod
    def zero(cls, ring: Sequence[str]) -> "Poly":
        return cls(ring)

    @classmethod
    def constant(cls, ring: Sequence[str], c: Coefficient) -> "Poly":
        ring = tuple(ring)
        return cls(ring, {(0,) * len(ring): c})

    @classmethod
    def one(cls, ring: Sequence[str]) -> "Poly":
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring: Sequence[str], name: str) -> "Poly":
        ring = tuple(ring)
        if name not in ring:
            raise SignatureMismatch(f"unknown variable {name!r} for ring {ring}")
        e = tuple(1 if v == name else 0 for v in ring)
        return cls(ring, {e: 1})

    @classmethod
    def variables(cls, ring: Sequence[str]) -> List["Poly"]:
        return [cls.variable(ring, name) for name in ring]

    @classmethod
    def parse(cls, text: str, ring: Sequence[str]) -> "Poly":
        from src.exactalg.expr import parse_poly

        return parse_poly(text, ring)

    # ---------- inspection ----------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    @property
    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.ring), Fraction(0))

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def support(self) -> Tuple[str, ...]:
        """Variables that occur with a nonzero exponent."""
        return tuple(v for i, v in enumerate(self.ring) if any(e[i] for e in self.terms))

    def leading_term(self, order: MonomialOrder = GREVLEX) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exponent:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    # ---------- arithmetic ----------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise SignatureMismatch(f"ring {other.ring} does not match {self.ring}")
            return other
        if isinstance(other, (int, Rational)):
            return Poly.constant(self.ring, Fraction(other))
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Coefficient) -> "Poly":
        c = Fraction(c)
        return Poly(self.ring, {e: c * v for e, v in self.terms.items()})

    def mul_term(self, e: Exponent, c: Coefficient) -> "Poly":
        c = Fraction(c)
        return Poly(self.ring, {mono_mul(m, e): c * v for m, v in self.terms.items()})

    def monic(self, order: MonomialOrder = GREVLEX) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading_term(order)[1])

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Quotient of an exact division; raises NotDivisible on a nonzero remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise NotDivisible("division by the zero polynomial")
        lm, lc = divisor.leading_term()
        key = GREVLEX.key
        rest = dict(self.terms)
        quotient: Dict[Exponent, Fraction] = {}
        while rest:
            m = max(rest, key=key)
            if not mono_divides(lm, m):
                raise NotDivisible(f"{self} is not a multiple of {divisor}")
            shift = mono_div(m, lm)
            coef = rest[m] / lc
            quotient[shift] = quotient.get(shift, 0) + coef
            for e, c in divisor.terms.items():
                target = mono_mul(e, shift)
                value = rest.get(target, 0) - coef * c
                if value:
                    rest[target] = value
                else:
                    rest.pop(target, None)
        return Poly(self.ring, quotient)

    # ---------- ring changes ----------
    def substitute(self, images: Sequence["Poly"], ring: Optional[Sequence[str]] = None) -> "Poly":
        """Evaluate at `images` (one per variable of this ring); the result lives in their common ring."""
        if len(images) != len(self.ring):
            raise SignatureMismatch(f"{len(images)} images for {len(self.ring)} variables")
        target = tuple(ring) if ring is not None else (images[0].ring if images else ())
        for image in images:
            if image.ring != target:
                raise SignatureMismatch(f"image ring {image.ring} does not match {target}")
        powers: Dict[Tuple[int, int], Poly] = {}

        def power(i: int, k: int) -> Poly:
            if (i, k) not in powers:
                powers[(i, k)] = images[i] ** k
            return powers[(i, k)]

        result = Poly.zero(target)
        for e, c in self.terms.items():
            term = Poly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def in_ring(self, ring: Sequence[str]) -> "Poly":
        """Re-express in another variable list by name; variables that occur must exist there."""
        ring = tuple(ring)
        if ring == self.ring:
            return self
        positions = []
        for i, name in enumerate(self.ring):
            if name in ring:
                positions.append((i, ring.index(name)))
            elif any(e[i] for e in self.terms):
                raise SignatureMismatch(f"variable {name!r} does not exist in {ring}")
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(ring)
            for i, j in positions:
                new[j] = e[i]
            terms[tuple(new)] = c
        return Poly(ring, terms)

    def rename(self, mapping: Mapping[str, str]) -> "Poly":
        """Same terms over a ring whose variables are renamed through `mapping`."""
        return Poly(tuple(mapping.get(v, v) for v in self.ring), self.terms)

    # ---------- comparison and printing ----------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational)):
            return self.terms == ({(0,) * len(self.ring): Fraction(other)} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for index, (e, c) in enumerate(self.sorted_terms(order)):
            mono = format_monomial(self.ring, e)
            magnitude = abs(c)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if index == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r}, ring={self.ring})"
