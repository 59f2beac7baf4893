"""Ideals of Q[x1..xn] with lazily cached Gröbner bases and the standard ideal toolkit."""

import itertools
import threading
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.exception import SignatureMismatch
from src.exactalg.groebner import BasisElement, buchberger, reduce_full, reduced_basis
from src.exactalg.order import GREVLEX, MonomialOrder
from src.exactalg.poly import Poly, Ring, fresh_variable, mono_divides


class Ideal:
    """
    An ideal given by generators in a fixed ring.

    Reduced bases are cached per monomial order. The cache is filled under a
    per-instance lock so concurrent readers see either nothing or a finished basis.
    """

    def __init__(self, ring: Sequence[str], generators: Iterable[Poly] = ()):
        self.ring: Ring = tuple(ring)
        gens = []
        for g in generators:
            if not isinstance(g, Poly):
                g = Poly.constant(self.ring, g)
            if g.ring != self.ring:
                raise SignatureMismatch(f"generator ring {g.ring} does not match {self.ring}")
            gens.append(g)
        self.generators: Tuple[Poly, ...] = tuple(gens)
        self._bases: Dict[MonomialOrder, List[Poly]] = {}
        self._tracked: Optional[List[BasisElement]] = None
        self._lock = threading.Lock()

    # ---------- constructors ----------
    @classmethod
    def zero(cls, ring: Sequence[str]) -> "Ideal":
        return cls(ring)

    @classmethod
    def unit(cls, ring: Sequence[str]) -> "Ideal":
        return cls(ring, [Poly.one(ring)])

    @classmethod
    def parse(cls, texts: Sequence[str], ring: Sequence[str]) -> "Ideal":
        return cls(ring, [Poly.parse(text, ring) for text in texts])

    def _check(self, f: Poly) -> Poly:
        if isinstance(f, Poly):
            if f.ring != self.ring:
                raise SignatureMismatch(f"element ring {f.ring} does not match {self.ring}")
            return f
        return Poly.constant(self.ring, f)

    def _check_ideal(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise SignatureMismatch(f"ideal ring {other.ring} does not match {self.ring}")
        return other

    # ---------- Gröbner bases ----------
    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> List[Poly]:
        basis = self._bases.get(order)
        if basis is not None:
            return basis
        with self._lock:
            if order not in self._bases:
                elements = buchberger([g.terms for g in self.generators], len(self.ring), order.key)
                self._bases[order] = [Poly(self.ring, terms) for terms in reduced_basis(elements, order.key)]
            return self._bases[order]

    def _tracked_basis(self) -> List[BasisElement]:
        if self._tracked is None:
            with self._lock:
                if self._tracked is None:
                    self._tracked = buchberger([g.terms for g in self.generators], len(self.ring),
                                               GREVLEX.key, track=True)
        return self._tracked

    def normal_form(self, f: Poly, order: MonomialOrder = GREVLEX) -> Poly:
        f = self._check(f)
        basis = [BasisElement(dict(g.terms), order.key) for g in self.groebner_basis(order)]
        remainder, _ = reduce_full(f.terms, basis, order.key)
        return Poly(self.ring, remainder)

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        other = self._check_ideal(other)
        return all(self.contains(g) for g in other.generators)

    def membership_with_witness(self, f: Poly) -> Optional[List[Poly]]:
        """Cofactors c_i with f = sum c_i * g_i over the stored generators, or None."""
        f = self._check(f)
        if f.is_zero:
            return [Poly.zero(self.ring) for _ in self.generators]
        basis = self._tracked_basis()
        remainder, quotients = reduce_full(f.terms, basis, GREVLEX.key, track=True)
        if remainder:
            return None
        cofactors = [Poly.zero(self.ring) for _ in self.generators]
        for element, q in zip(basis, quotients):
            if not q:
                continue
            q_poly = Poly(self.ring, q)
            for slot, cof in enumerate(element.cofactors):
                if cof:
                    cofactors[slot] = cofactors[slot] + q_poly * Poly(self.ring, cof)
        return cofactors

    def is_unit(self) -> bool:
        return any(g.is_constant and not g.is_zero for g in self.groebner_basis())

    def is_zero(self) -> bool:
        return all(g.is_zero for g in self.generators)

    # ---------- ideal arithmetic ----------
    def with_generators(self, extra: Iterable[Poly]) -> "Ideal":
        return Ideal(self.ring, list(self.generators) + [self._check(g) for g in extra])

    def sum(self, other: "Ideal") -> "Ideal":
        return self.with_generators(self._check_ideal(other).generators)

    def product(self, other: "Ideal") -> "Ideal":
        other = self._check_ideal(other)
        return Ideal(self.ring, [g * h for g in self.generators for h in other.generators])

    def power(self, n: int) -> "Ideal":
        if n == 0:
            return Ideal.unit(self.ring)
        gens = [g for g in self.groebner_basis()]
        result = []
        for combo in itertools.combinations_with_replacement(range(len(gens)), n):
            term = Poly.one(self.ring)
            for index in combo:
                term = term * gens[index]
            result.append(term)
        return Ideal(self.ring, result)

    def equal(self, other: "Ideal") -> bool:
        other = self._check_ideal(other)
        return self.contains_ideal(other) and other.contains_ideal(self)

    def in_ring(self, ring: Sequence[str]) -> "Ideal":
        return Ideal(ring, [g.in_ring(ring) for g in self.generators])

    def _auxiliary(self, base: str = "t") -> Tuple[str, Ring]:
        t = fresh_variable(base, self.ring)
        return t, (t,) + self.ring

    def elimination(self, drop: Sequence[str]) -> "Ideal":
        """Intersection with the subring in the remaining variables."""
        drop = [v for v in self.ring if v in set(drop)]
        if not drop:
            return Ideal(self.ring, self.groebner_basis())
        keep = tuple(v for v in self.ring if v not in drop)
        ring = tuple(drop) + keep
        extended = Ideal(ring, [g.in_ring(ring) for g in self.generators])
        basis = extended.groebner_basis(MonomialOrder.elimination(len(drop)))
        return Ideal(keep, [g.in_ring(keep) for g in basis if not set(g.support()) & set(drop)])

    def saturation(self, f: Poly) -> "Ideal":
        """I : f^oo through the elimination of t from I + <1 - t*f>."""
        f = self._check(f)
        if f.is_zero:
            return Ideal.unit(self.ring)
        if f.is_constant:
            return Ideal(self.ring, self.groebner_basis())
        t, ring = self._auxiliary()
        gens = [g.in_ring(ring) for g in self.generators]
        gens.append(1 - Poly.variable(ring, t) * f.in_ring(ring))
        return Ideal(ring, gens).elimination([t]).in_ring(self.ring)

    def intersection(self, other: "Ideal") -> "Ideal":
        other = self._check_ideal(other)
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.ring)
        t, ring = self._auxiliary()
        tp = Poly.variable(ring, t)
        gens = [tp * g.in_ring(ring) for g in self.generators]
        gens += [(1 - tp) * g.in_ring(ring) for g in other.generators]
        return Ideal(ring, gens).elimination([t]).in_ring(self.ring)

    def colon(self, f: Poly) -> "Ideal":
        """I : f = (I ∩ <f>) / f."""
        f = self._check(f)
        if f.is_zero:
            return Ideal.unit(self.ring)
        meet = self.intersection(Ideal(self.ring, [f]))
        return Ideal(self.ring, [g.divide_exact(f) for g in meet.generators])

    def is_nonzerodivisor(self, f: Poly) -> bool:
        return self.colon(f).equal(self)

    def radical_contains(self, g: Poly) -> bool:
        g = self._check(g)
        if g.is_zero:
            return True
        t, ring = self._auxiliary()
        gens = [h.in_ring(ring) for h in self.generators]
        gens.append(1 - Poly.variable(ring, t) * g.in_ring(ring))
        return Ideal(ring, gens).is_unit()

    def vspace_dim(self) -> Optional[int]:
        """dim_Q of Q[x]/I via standard monomials; None when infinite."""
        basis = self.groebner_basis()
        if any(g.is_constant and not g.is_zero for g in basis):
            return 0
        leading = [g.leading_monomial() for g in basis]
        n = len(self.ring)
        bounds = []
        for i in range(n):
            pure = [e[i] for e in leading if e[i] and not any(e[j] for j in range(n) if j != i)]
            if not pure:
                return None
            bounds.append(min(pure))
        count = 0
        for e in itertools.product(*(range(b) for b in bounds)):
            if not any(mono_divides(m, e) for m in leading):
                count += 1
        return count

    def standard_monomials(self) -> Optional[List[Poly]]:
        """Monomial basis of the quotient when it is finite dimensional."""
        if self.vspace_dim() is None:
            return None
        leading = [g.leading_monomial() for g in self.groebner_basis()]
        if any(not any(m) for m in leading):
            return []
        n = len(self.ring)
        bounds = [min(e[i] for e in leading if e[i] and not any(e[j] for j in range(n) if j != i))
                  for i in range(n)]
        monomials = [e for e in itertools.product(*(range(b) for b in bounds))
                     if not any(mono_divides(m, e) for m in leading)]
        return [Poly(self.ring, {e: 1}) for e in sorted(monomials, key=GREVLEX.key, reverse=True)]

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        return "<" + ", ".join(g.to_str(order) for g in self.generators) + ">"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Ideal({self.to_str()}, ring={self.ring})"


# ---------- functional aliases ----------
def groebner_basis(ideal: Ideal, order: MonomialOrder = GREVLEX) -> List[Poly]:
    return ideal.groebner_basis(order)


def normal_form(f: Poly, ideal: Ideal, order: MonomialOrder = GREVLEX) -> Poly:
    return ideal.normal_form(f, order)


def membership_with_witness(f: Poly, ideal: Ideal) -> Optional[List[Poly]]:
    return ideal.membership_with_witness(f)


def saturation(ideal: Ideal, f: Poly) -> Ideal:
    return ideal.saturation(f)


def colon(ideal: Ideal, f: Poly) -> Ideal:
    return ideal.colon(f)


def elimination(ideal: Ideal, drop: Sequence[str]) -> Ideal:
    return ideal.elimination(drop)


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    return first.sum(second)


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    return first.product(second)


def ideals_equal(first: Ideal, second: Ideal) -> bool:
    return first.equal(second)


def intersection(first: Ideal, second: Ideal) -> Ideal:
    return first.intersection(second)


def is_nonzerodivisor(f: Poly, ideal: Ideal) -> bool:
    return ideal.is_nonzerodivisor(f)


def vspace_dim(ideal: Ideal) -> Optional[int]:
    return ideal.vspace_dim()


def radical_contains(ideal: Ideal, g: Poly) -> bool:
    return ideal.radical_contains(g)
