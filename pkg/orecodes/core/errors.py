"""Exception hierarchy.

This module provides:
- OreCodesError: Base class carrying the command-line exit code
- ParameterError: Invalid parameters (exit 2)
- PreconditionError: A mathematical precondition does not hold (exit 3)
- BudgetExceeded: Enumeration larger than the configured budget (exit 4)
- VerificationFailure: A checked identity failed (exit 1)
"""

from typing import Any, Dict, Optional


class OreCodesError(Exception):
    """Base class for all library errors.

    Attributes:
        exit_code: Process exit code used by the command line
        details: Extra structured information about the failure
    """
    exit_code: int = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "error": type(self).__name__,
            "message": str(self),
            "exit_code": self.exit_code,
            "details": self.details,
        }


class ParameterError(OreCodesError):
    exit_code = 2


class PreconditionError(OreCodesError):
    exit_code = 3


class BudgetExceeded(OreCodesError):
    exit_code = 4


class VerificationFailure(OreCodesError):
    exit_code = 1


# fields
class DivisionByZero(ParameterError, ZeroDivisionError):
    pass


class FieldMismatch(ParameterError):
    pass


class NotAFiniteField(ParameterError):
    pass


class InvalidModulus(ParameterError):
    pass


# context
class SIsOne(ParameterError):
    pass


class ZeroDerivation(ParameterError):
    pass


class NotApplicable(ParameterError):
    pass


class WrongKind(ParameterError):
    pass


class NoLinearizedAnnihilator(PreconditionError):
    pass


# Ore polynomials
class ContextMismatch(ParameterError):
    pass


class DivisionByZeroPoly(ParameterError, ZeroDivisionError):
    pass


class ZeroInput(ParameterError):
    pass


class NonDivisible(PreconditionError):
    pass


# evaluation
class RamifiedPoint(PreconditionError):
    pass


class RepeatedUpsilon(PreconditionError):
    pass


# residues
class NonSplitDenominator(PreconditionError):
    pass


class ZeroPointFrobenius(PreconditionError):
    pass


class ZeroTruncation(ParameterError):
    pass


class TruncationTooSmall(PreconditionError):
    pass


class ZeroFunction(PreconditionError):
    pass


# codes
class KTooLarge(PreconditionError):
    pass


class ShapeMismatch(ParameterError):
    pass
