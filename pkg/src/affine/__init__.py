from src.affine.presentation import Presentation, PolyLike
from src.affine.ring_map import (
    RingMap,
    Localized,
    TensorProduct,
    make_ring_map,
    localize,
    closure_of_principal_open,
    rename_apart,
    tensor_over,
    kernel,
    verify_localized_inverse,
    subalgebra_member,
)
from src.affine.blowup import (
    BlowupChart,
    BlowupChartSet,
    Gluing,
    blowup_charts,
    check_gluing,
    strict_transform,
)

__all__ = [
    "Presentation",
    "PolyLike",
    "RingMap",
    "Localized",
    "TensorProduct",
    "make_ring_map",
    "localize",
    "closure_of_principal_open",
    "rename_apart",
    "tensor_over",
    "kernel",
    "verify_localized_inverse",
    "subalgebra_member",
    "BlowupChart",
    "BlowupChartSet",
    "Gluing",
    "blowup_charts",
    "check_gluing",
    "strict_transform",
]
