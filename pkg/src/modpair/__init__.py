from src.modpair.pair import (
    Chart,
    ModulusPair,
    make_pair,
    interior,
    shift_gluings,
    coproduct,
    rescale_divisor,
)
from src.modpair.morphism import (
    ChartMap,
    ChartVerdict,
    AmbientMorphism,
    ambient_morphism,
    check_admissible,
    identity,
    compose,
    equal_on_interior,
)
from src.modpair.sigma import (
    SigmaCertificate,
    BlowupInDivisor,
    ComponentClosure,
    Composite,
    CertifiedSigma,
    Decomposition,
    same_pair,
    certify_sigma,
    sigma_blowup,
    identity_sigma,
    compose_sigmas,
    decompose_interior,
)
from src.modpair.cover import (
    COVER_KINDS,
    CoverMember,
    CoverVerdict,
    RqfhNode,
    principal_open_member,
    finite_member,
    check_cover,
)

__all__ = [
    "Chart",
    "ModulusPair",
    "make_pair",
    "interior",
    "shift_gluings",
    "coproduct",
    "rescale_divisor",
    "ChartMap",
    "ChartVerdict",
    "AmbientMorphism",
    "ambient_morphism",
    "check_admissible",
    "identity",
    "compose",
    "equal_on_interior",
    "SigmaCertificate",
    "BlowupInDivisor",
    "ComponentClosure",
    "Composite",
    "CertifiedSigma",
    "Decomposition",
    "same_pair",
    "certify_sigma",
    "sigma_blowup",
    "identity_sigma",
    "compose_sigmas",
    "decompose_interior",
    "COVER_KINDS",
    "CoverMember",
    "CoverVerdict",
    "RqfhNode",
    "principal_open_member",
    "finite_member",
    "check_cover",
]
