from src.modpair import coproduct
from src.products.ambient import (
    AmbientProductResult,
    KeyLemmaReport,
    ProductBlock,
    ProductChart,
    ambient_product,
    exceptional_check,
    fibre_total,
    interior_comparison,
    key_lemma_check,
)
from src.products.box import BoxBlock, BoxProductResult, RoofComparison, box_map, box_product, box_to_times
from src.products.fill import FillIn, fibre_fill_in
from src.products.aisoc import AisoCReport, ChartComparison, SubringChart, build_AisoC
from src.products.tensor_fiber import TensorFiberReport, tensor_fiber_check

__all__ = [
    "coproduct",
    "AmbientProductResult",
    "KeyLemmaReport",
    "ProductBlock",
    "ProductChart",
    "ambient_product",
    "exceptional_check",
    "fibre_total",
    "interior_comparison",
    "key_lemma_check",
    "BoxBlock",
    "BoxProductResult",
    "RoofComparison",
    "box_map",
    "box_product",
    "box_to_times",
    "FillIn",
    "fibre_fill_in",
    "AisoCReport",
    "ChartComparison",
    "SubringChart",
    "build_AisoC",
    "TensorFiberReport",
    "tensor_fiber_check",
]
