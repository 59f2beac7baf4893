"""Buchberger's algorithm on raw term dictionaries.

Polynomials here are plain ``{exponent: Fraction}`` dicts; the `Ideal` class
wraps them. Pair selection uses the normal strategy (smallest lcm first) and
both Buchberger criteria. With ``track=True`` every basis element carries its
cofactors with respect to the input generators, which is what membership
witnesses are read from.
"""

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.exactalg.poly import mono_div, mono_divides, mono_lcm, mono_mul
from src.exactalg.order import Exponent
from src.logger import logger

Terms = Dict[Exponent, Fraction]
Key = Callable[[Exponent], tuple]


def _sub_scaled(p: Terms, g: Terms, coef: Fraction, shift: Exponent) -> None:
    """p -= coef * x^shift * g, in place."""
    for e, c in g.items():
        target = mono_mul(e, shift)
        value = p.get(target, 0) - coef * c
        if value:
            p[target] = value
        else:
            p.pop(target, None)


def _add_into(p: Terms, q: Terms, coef: Fraction = Fraction(1), shift: Optional[Exponent] = None) -> None:
    """p += coef * x^shift * q, in place."""
    for e, c in q.items():
        target = mono_mul(e, shift) if shift is not None else e
        value = p.get(target, 0) + coef * c
        if value:
            p[target] = value
        else:
            p.pop(target, None)


def _mul(p: Terms, q: Terms) -> Terms:
    out: Terms = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = mono_mul(e1, e2)
            value = out.get(e, 0) + c1 * c2
            if value:
                out[e] = value
            else:
                out.pop(e, None)
    return out


class BasisElement:
    __slots__ = ("terms", "lm", "lc", "cofactors")

    def __init__(self, terms: Terms, key: Key, cofactors: Optional[List[Terms]] = None):
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.terms = terms
        self.cofactors = cofactors


def reduce_full(f: Terms, basis: Sequence[BasisElement], key: Key,
                track: bool = False) -> Tuple[Terms, Optional[List[Terms]]]:
    """Full multivariate division; returns the remainder and, if tracked, one quotient per basis element."""
    p = dict(f)
    remainder: Terms = {}
    quotients: Optional[List[Terms]] = [dict() for _ in basis] if track else None
    while p:
        m = max(p, key=key)
        c = p[m]
        for index, element in enumerate(basis):
            if mono_divides(element.lm, m):
                shift = mono_div(m, element.lm)
                coef = c / element.lc
                _sub_scaled(p, element.terms, coef, shift)
                if quotients is not None:
                    _add_into(quotients[index], {shift: coef})
                break
        else:
            remainder[m] = c
            del p[m]
    return remainder, quotients


def _monic(element_terms: Terms, cofactors: Optional[List[Terms]], key: Key):
    lc = element_terms[max(element_terms, key=key)]
    if lc == 1:
        return element_terms, cofactors
    inv = 1 / lc
    terms = {e: c * inv for e, c in element_terms.items()}
    if cofactors is not None:
        cofactors = [{e: c * inv for e, c in cof.items()} for cof in cofactors]
    return terms, cofactors


def buchberger(generators: Sequence[Terms], nvars: int, key: Key, track: bool = False) -> List[BasisElement]:
    """A (not yet reduced) Gröbner basis of the generators."""
    zero = (0,) * nvars
    basis: List[BasisElement] = []
    count = len(generators)
    for index, g in enumerate(generators):
        if not g:
            continue
        cofactors = None
        if track:
            cofactors = [dict() for _ in range(count)]
            cofactors[index] = {zero: Fraction(1)}
        terms, cofactors = _monic(dict(g), cofactors, key)
        basis.append(BasisElement(terms, key, cofactors))

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    reductions = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(mono_lcm(basis[ij[0]].lm, basis[ij[1]].lm)), ij))
        pairs.discard((i, j))
        gi, gj = basis[i], basis[j]
        lcm = mono_lcm(gi.lm, gj.lm)

        # Criterion 1: coprime leading monomials.
        if lcm == mono_mul(gi.lm, gj.lm):
            continue
        # Criterion 2: a third element whose pairs with both are already processed.
        if any(
            k != i and k != j
            and mono_divides(basis[k].lm, lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue

        shift_i, shift_j = mono_div(lcm, gi.lm), mono_div(lcm, gj.lm)
        spoly: Terms = {}
        _add_into(spoly, gi.terms, 1 / gi.lc, shift_i)
        _add_into(spoly, gj.terms, -1 / gj.lc, shift_j)
        remainder, quotients = reduce_full(spoly, basis, key, track)
        reductions += 1
        if not remainder:
            continue

        cofactors = None
        if track:
            cofactors = [dict() for _ in range(count)]
            for slot in range(count):
                _add_into(cofactors[slot], gi.cofactors[slot], 1 / gi.lc, shift_i)
                _add_into(cofactors[slot], gj.cofactors[slot], -1 / gj.lc, shift_j)
            for index, q in enumerate(quotients):
                if not q:
                    continue
                for slot in range(count):
                    if basis[index].cofactors[slot]:
                        _add_into(cofactors[slot], _mul(q, basis[index].cofactors[slot]), Fraction(-1))
        terms, cofactors = _monic(remainder, cofactors, key)
        new_index = len(basis)
        basis.append(BasisElement(terms, key, cofactors))
        pairs.update((k, new_index) for k in range(new_index))

    logger.debug(f"buchberger: {len(generators)} generators -> {len(basis)} elements after {reductions} reductions")
    return basis


def reduced_basis(basis: Sequence[BasisElement], key: Key) -> List[Terms]:
    """The unique reduced Gröbner basis, sorted by descending leading monomial."""
    minimal: List[BasisElement] = []
    for index, element in enumerate(basis):
        redundant = False
        for other_index, other in enumerate(basis):
            if other_index == index or not mono_divides(other.lm, element.lm):
                continue
            if other.lm != element.lm or other_index < index:
                redundant = True
                break
        if not redundant:
            minimal.append(element)

    reduced: List[Terms] = []
    for element in minimal:
        others = [other for other in minimal if other is not element]
        remainder, _ = reduce_full(element.terms, others, key)
        terms, _ = _monic(remainder, None, key)
        reduced.append(terms)
    reduced.sort(key=lambda terms: key(max(terms, key=key)), reverse=True)
    return reduced
