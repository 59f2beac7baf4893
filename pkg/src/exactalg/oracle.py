"""Independent membership oracle: degree-bounded Macaulay matrices over QQ.

f lies in I up to degree D iff appending f to the rows m*g (deg(m*g) <= D)
does not raise the rank. This never consults the Buchberger kernel, so the
two can validate each other. Exact linear algebra comes from sympy.
"""

import itertools
from typing import Dict, List, Optional

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.exactalg.ideal import Ideal
from src.exactalg.order import Exponent
from src.exactalg.poly import Poly, mono_mul


def _monomials_up_to(nvars: int, degree: int) -> List[Exponent]:
    if degree < 0:
        return []
    out = []
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), total):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _rank(rows: List[Dict[int, object]], ncols: int) -> int:
    rows = [row for row in rows if row]
    if not rows:
        return 0
    matrix = DomainMatrix({i: row for i, row in enumerate(rows)}, (len(rows), ncols), QQ)
    return matrix.rank()


def degree_bound(f: Poly, ideal: Ideal, slack: int = 4) -> int:
    top = max((g.total_degree for g in ideal.generators if not g.is_zero), default=0)
    return max(f.total_degree, 0) + top + slack


def macaulay_member(f: Poly, ideal: Ideal, degree: Optional[int] = None, slack: int = 4,
                    max_columns: Optional[int] = None) -> bool:
    """True iff f is a Q-linear combination of the products m*g with total degree <= `degree`."""
    if f.is_zero:
        return True
    if degree is None:
        degree = degree_bound(f, ideal, slack)
    nvars = len(ideal.ring)
    columns: Dict[Exponent, int] = {}

    def row_of(terms) -> Dict[int, object]:
        row = {}
        for e, c in terms.items():
            j = columns.setdefault(e, len(columns))
            row[j] = QQ(c.numerator, c.denominator)
        return row

    rows = []
    for g in ideal.generators:
        if g.is_zero:
            continue
        for m in _monomials_up_to(nvars, degree - g.total_degree):
            rows.append(row_of({mono_mul(e, m): c for e, c in g.terms.items()}))
    target = row_of(f.terms)
    if max_columns is not None and len(columns) > max_columns:
        raise ValueError(f"oracle matrix has {len(columns)} columns, above the limit {max_columns}")
    return _rank(rows + [target], len(columns)) == _rank(rows, len(columns))


def macaulay_unit(ideal: Ideal, degree: int) -> bool:
    return macaulay_member(Poly.one(ideal.ring), ideal, degree)
