"""Custom exceptions for rhombil."""


class RhombilError(Exception):
    """Base exception for rhombil operations."""


class ArithmeticDomainError(RhombilError):
    """A combinatorial primitive was evaluated outside its domain."""


class ZeroDenominator(ArithmeticDomainError, ZeroDivisionError):
    """A reciprocal product contains a zero factor."""


class NegativeArgument(ArithmeticDomainError, ValueError):
    """An argument that must be non-negative was negative."""


class IndexOutOfRange(ArithmeticDomainError, IndexError):
    """A prefix-sum index exceeds the sequence length."""


class FormulaError(RhombilError):
    """Error while evaluating a closed-form product."""


class ParameterOrder(FormulaError, ValueError):
    """Halved hexagon parameters violate a <= b."""


class OddLength(FormulaError, ValueError):
    """A trapezoid sequence has odd length and no padding rule applies."""


class FormulaSingular(FormulaError):
    """A factor of the product is undefined at this parameter point.

    Attributes:
        factor: Human-readable name of the offending factor.
    """

    def __init__(self, factor: str, message: str | None = None) -> None:
        self.factor = factor
        super().__init__(message or f"singular factor {factor}")


class ParityMismatch(FormulaError, ValueError):
    """The symmetric hexagon requires x and z of equal parity."""


class GeometryError(RhombilError):
    """Error while building or splitting a region."""


class BadParameters(GeometryError, ValueError):
    """Region parameters fall outside the family's admissible domain."""


class NotSymmetric(GeometryError):
    """Region is not mirror symmetric about its vertical axis."""


class AxisNotCutSet(GeometryError):
    """Axis cells do not separate the region into two halves."""


class Indivisible(GeometryError):
    """A proposed split violates the separating or balancing condition."""


class EngineError(RhombilError):
    """Error inside the tiling counters."""


class ResourceLimit(EngineError):
    """The frontier grew past the configured state cap.

    Attributes:
        width: Bandwidth of the sweep order that was attempted.
        states: Number of live states when the cap was hit.
        cap: The cap in force.
    """

    def __init__(self, width: int, states: int, cap: int) -> None:
        self.width = width
        self.states = states
        self.cap = cap
        super().__init__(f"frontier exceeded {cap} states (width {width}, {states} live states)")


class TooLarge(EngineError):
    """Region is too large for the brute-force reference counter."""


class MissingCell(EngineError, KeyError):
    """A named corner cell is not part of the region."""


class ClassViolation(EngineError, ValueError):
    """Corner cells do not respect the bipartite classes."""


class CalibrationError(RhombilError):
    """A convention switch could not be resolved against the oracle."""


class AmbiguousCalibration(CalibrationError):
    """More than one variant of a switch passed."""


class NoVariantPasses(CalibrationError):
    """No variant of a switch passed."""
