"""Standardized check results.

This module provides:
- CheckStatus: Outcome of a verification
- CheckResult: Result format shared by the verifiers and the selftest suites
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional


class CheckStatus(Enum):
    """Status of a verification."""
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    """Standardized result of a verification.

    Attributes:
        name: What was checked
        status: The verification outcome
        checked: Number of instances examined
        error: Description of the first failure, if any
        metadata: Additional data about the run (timings, parameters)
    """
    name: str
    status: CheckStatus
    checked: int = 0
    error: Optional[str] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def passed(cls, name: str, checked: int, **metadata) -> "CheckResult":
        """Create a passing result."""
        return cls(name=name, status=CheckStatus.PASSED, checked=checked, metadata=metadata)

    @classmethod
    def failed(cls, name: str, error: str, checked: int = 0, **metadata) -> "CheckResult":
        """Create a failing result."""
        return cls(
            name=name,
            status=CheckStatus.FAILED,
            checked=checked,
            error=error,
            metadata=metadata
        )

    @property
    def ok(self) -> bool:
        return self.status != CheckStatus.FAILED

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "name": self.name,
            "status": self.status.value,
            "checked": self.checked,
            "error": self.error,
            "metadata": self.metadata,
        }

    def __str__(self) -> str:
        if self.status == CheckStatus.FAILED:
            return f"{self.name}: FAILED ({self.error})"
        return f"{self.name}: {self.status.value} ({self.checked} checked)"
