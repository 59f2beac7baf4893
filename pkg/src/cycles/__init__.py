from src.cycles.divisor import (
    DivisorOnRing,
    DivisorComparison,
    RephrasingReport,
    DDHReport,
    make_divisor,
    divisor_geq,
    principal_generator,
    intersection_divisor,
    rephrasing_check,
    ddh_check,
)
from src.cycles.correspondence import (
    PROPERNESS_KINDS,
    LeftProperness,
    Normalization,
    CycleComponent,
    CycleClosure,
    KmsyVerdict,
    ComponentReport,
    ModulusCorrespondence,
    chart_product,
    component_closure,
    check_properness,
    kmsy_modulus_check,
    check_correspondence,
    make_correspondence,
    graph_cycle,
)
from src.cycles.degree import (
    CyclePoint,
    image_point,
    pushforward_degree,
    pushforward_cycle,
    flat_fiber_multiplicity,
    pullback_cycle,
)

__all__ = [
    "DivisorOnRing",
    "DivisorComparison",
    "RephrasingReport",
    "DDHReport",
    "make_divisor",
    "divisor_geq",
    "principal_generator",
    "intersection_divisor",
    "rephrasing_check",
    "ddh_check",
    "PROPERNESS_KINDS",
    "LeftProperness",
    "Normalization",
    "CycleComponent",
    "CycleClosure",
    "KmsyVerdict",
    "ComponentReport",
    "ModulusCorrespondence",
    "chart_product",
    "component_closure",
    "check_properness",
    "kmsy_modulus_check",
    "check_correspondence",
    "make_correspondence",
    "graph_cycle",
    "CyclePoint",
    "image_point",
    "pushforward_degree",
    "pushforward_cycle",
    "flat_fiber_multiplicity",
    "pullback_cycle",
]
