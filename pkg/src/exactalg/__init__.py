from src.exactalg.order import MonomialOrder, LEX, GREVLEX
from src.exactalg.poly import Poly, fresh_variable
from src.exactalg.ideal import (
    Ideal,
    groebner_basis,
    normal_form,
    membership_with_witness,
    saturation,
    colon,
    elimination,
    ideal_sum,
    ideal_product,
    ideals_equal,
    intersection,
    is_nonzerodivisor,
    vspace_dim,
    radical_contains,
)
from src.exactalg.expr import parse_expr, parse_poly, format_expr, evaluate
from src.exactalg.oracle import macaulay_member, macaulay_unit

__all__ = [
    "MonomialOrder",
    "LEX",
    "GREVLEX",
    "Poly",
    "fresh_variable",
    "Ideal",
    "groebner_basis",
    "normal_form",
    "membership_with_witness",
    "saturation",
    "colon",
    "elimination",
    "ideal_sum",
    "ideal_product",
    "ideals_equal",
    "intersection",
    "is_nonzerodivisor",
    "vspace_dim",
    "radical_contains",
    "parse_expr",
    "parse_poly",
    "format_expr",
    "evaluate",
    "macaulay_member",
    "macaulay_unit",
]
