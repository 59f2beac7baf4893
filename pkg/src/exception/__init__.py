from src.exception.error import (
    ModpairError,
    AlgebraError,
    SignatureMismatch,
    NotDivisible,
    GeometryError,
    RelationNotPreserved,
    DivisorIsZero,
    EmptyCenter,
    ModulusError,
    ChartError,
    DivisorNotCartier,
    NotAdmissible,
    GluingMismatch,
    NotMinimal,
    CenterNotInDivisor,
    InteriorNotIso,
    NotJointlySurjective,
    NotPrincipalOpen,
    MissingIntegralityWitness,
    NotDisjointOnInterior,
    NotCoveringInterior,
    ProductError,
    SquareDoesNotCommute,
    ConstructionInvariantFailed,
    CycleError,
    IntersectionNotCartier,
    WitnessInvalid,
    FiberNotFinite,
    ScriptError,
    ParseError,
    ScriptValidationError,
    CommandFailed,
)

__all__ = [
    "ModpairError",
    "AlgebraError",
    "SignatureMismatch",
    "NotDivisible",
    "GeometryError",
    "RelationNotPreserved",
    "DivisorIsZero",
    "EmptyCenter",
    "ModulusError",
    "ChartError",
    "DivisorNotCartier",
    "NotAdmissible",
    "GluingMismatch",
    "NotMinimal",
    "CenterNotInDivisor",
    "InteriorNotIso",
    "NotJointlySurjective",
    "NotPrincipalOpen",
    "MissingIntegralityWitness",
    "NotDisjointOnInterior",
    "NotCoveringInterior",
    "ProductError",
    "SquareDoesNotCommute",
    "ConstructionInvariantFailed",
    "CycleError",
    "IntersectionNotCartier",
    "WitnessInvalid",
    "FiberNotFinite",
    "ScriptError",
    "ParseError",
    "ScriptValidationError",
    "CommandFailed",
]
