"""Core module: errors and result types shared by every package."""

from core.errors import (
    OreCodesError,
    ParameterError,
    PreconditionError,
    BudgetExceeded,
    VerificationFailure,
)
from core.results import CheckResult, CheckStatus

__all__ = [
    "OreCodesError",
    "ParameterError",
    "PreconditionError",
    "BudgetExceeded",
    "VerificationFailure",
    "CheckResult",
    "CheckStatus",
]
