from typing import Any, Dict, Optional


class ModpairError(Exception):
    """Base class for every error raised by the toolkit"""

    def __init__(self, message, logger=None):
        super().__init__(message)
        self.message = message
        if logger is not None:
            logger.error(message)

    def dict(self) -> Dict[str, str]:
        return {"type": self.__class__.__name__, "message": str(self.message)}


# ---------- exact algebra ----------
class AlgebraError(ModpairError):
    """Exception raised by polynomial and ideal arithmetic"""

    pass


class SignatureMismatch(AlgebraError):
    """Exception raised when polynomials or ideals live in different rings"""

    pass


class NotDivisible(AlgebraError):
    """Exception raised when an exact division leaves a remainder"""

    pass


# ---------- affine schemes ----------
class GeometryError(ModpairError):
    """Exception raised by presentations, ring maps and blow-ups"""

    pass


class RelationNotPreserved(GeometryError):
    """Exception raised when a ring map sends a defining relation outside the target ideal"""

    def __init__(self, index: int, relation: str, logger=None):
        self.index = index
        self.relation = relation
        super().__init__(f"relation {index} ({relation}) is not preserved", logger)

    def dict(self) -> Dict[str, Any]:
        return {**super().dict(), "index": self.index}


class DivisorIsZero(GeometryError):
    """Exception raised when localizing at an element that vanishes in the ring"""

    pass


class EmptyCenter(GeometryError):
    """Exception raised when a blow-up center has no generators"""

    pass


# ---------- modulus pairs ----------
class ModulusError(ModpairError):
    """Exception raised by modulus pairs, morphisms, certificates and covers"""

    pass


class ChartError(ModulusError):
    """Exception attached to a specific chart of a modulus pair"""

    def __init__(self, chart: int, message: str, logger=None):
        self.chart = chart
        super().__init__(f"chart {chart}: {message}", logger)

    def dict(self) -> Dict[str, Any]:
        return {**super().dict(), "chart": self.chart}


class DivisorNotCartier(ChartError):
    """Exception raised when a divisor generator is a zero divisor on its chart"""

    pass


class NotAdmissible(ChartError):
    """Exception raised when the modulus condition fails on a source chart"""

    pass


class GluingMismatch(ModulusError):
    """Exception raised when chart gluing data is inconsistent"""

    pass


class NotMinimal(ModulusError):
    """Exception raised when a minimal morphism is required"""

    pass


class CenterNotInDivisor(ModulusError):
    """Exception raised when a blow-up center is not supported inside the divisor"""

    pass


class InteriorNotIso(ModulusError):
    """Exception raised when a morphism fails to be an isomorphism over the interior"""

    pass


class NotJointlySurjective(ModulusError):
    """Exception raised when a covering family misses points"""

    pass


class NotPrincipalOpen(ModulusError):
    """Exception raised when a Zariski covering member is not a principal open"""

    pass


class MissingIntegralityWitness(ModulusError):
    """Exception raised when a finite covering member lacks a valid monic witness"""

    pass


class NotDisjointOnInterior(ModulusError):
    """Exception raised when component ideals meet over the interior"""

    pass


class NotCoveringInterior(ModulusError):
    """Exception raised when component ideals do not cover the interior"""

    pass


# ---------- products ----------
class ProductError(ModpairError):
    """Exception raised by product constructions"""

    pass


class SquareDoesNotCommute(ProductError):
    """Exception raised when a fill-in square fails to commute on interiors"""

    pass


class ConstructionInvariantFailed(ProductError):
    """Exception raised when a construction violates one of its proven identities"""

    pass


# ---------- cycles ----------
class CycleError(ModpairError):
    """Exception raised by divisor calculus and relative cycles"""

    pass


class IntersectionNotCartier(CycleError):
    """Exception raised when the intersection of two divisors is not principal"""

    pass


class WitnessInvalid(CycleError):
    """Exception raised when a normalization or properness witness is malformed"""

    pass


class FiberNotFinite(CycleError):
    """Exception raised when a fiber is not Artinian"""

    pass


# ---------- scripts ----------
class ScriptError(ModpairError):
    """Exception raised while parsing or running a DSL script"""

    pass


class ParseError(ScriptError):
    """Exception raised for malformed script text"""

    def __init__(self, message: str, line: int, column: int, expected: Optional[list] = None, logger=None):
        self.line = line
        self.column = column
        self.expected = sorted(expected or [])
        super().__init__(f"{line}:{column}: {message}", logger)

    def dict(self) -> Dict[str, Any]:
        return {**super().dict(), "line": self.line, "column": self.column, "expected": self.expected}


class ScriptValidationError(ScriptError):
    """Exception raised for unresolved names, duplicates or misuse of verify"""

    pass


class CommandFailed(ScriptError):
    """Exception raised when a command hits a hard error"""

    def __init__(self, command: str, cause: ModpairError, logger=None):
        self.command = command
        self.cause = cause
        super().__init__(f"{command}: {cause.dict()['type']}: {cause.message}", logger)

    def dict(self) -> Dict[str, Any]:
        return {**super().dict(), "command": self.command, "cause": self.cause.dict()}
