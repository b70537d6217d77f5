"""Base suite class and suite registry.

This module provides the foundation for the acceptance suites:
- VerificationSuite: Abstract base class for all suites
- SuiteRegistry: Central registry for suite discovery and lookup
- register_suite: Decorator adding a suite class to the global registry
"""

import logging
import time
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Type

import numpy as np

from config import Settings
from core.errors import OreCodesError
from core.results import CheckResult


# Configure logging
logger = logging.getLogger(__name__)


class VerificationSuite(ABC):
    """Abstract base class for acceptance suites.

    Each suite must implement:
    - number: Suite number (1-9)
    - name: Short identifier
    - description: Human-readable description
    - check: The property check, raising VerificationFailure on a counterexample
    """

    @property
    @abstractmethod
    def number(self) -> int:
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    def check(self, rng: np.random.Generator, settings: Settings) -> int:
        """Run the property checks.

        Args:
            rng: Seeded generator for every random sample
            settings: Application settings (the trials scale)

        Returns:
            Number of instances examined
        """
        pass

    def run(self, rng: np.random.Generator, settings: Settings) -> CheckResult:
        """Run check and wrap the outcome in a CheckResult."""
        start = time.perf_counter()
        try:
            checked = self.check(rng, settings)
        except OreCodesError as e:
            elapsed = time.perf_counter() - start
            logger.error(f"[Selftest] suite {self.number} ({self.name}) failed: {e}")
            return CheckResult.failed(
                self.name, str(e), number=self.number, seconds=round(elapsed, 3), error_type=type(e).__name__
            )
        elapsed = time.perf_counter() - start
        logger.info(f"[Selftest] suite {self.number} ({self.name}): {checked} instances in {elapsed:.2f}s")
        return CheckResult.passed(self.name, checked, number=self.number, seconds=round(elapsed, 3))


class SuiteRegistry:
    """Central registry for acceptance suites.

    Provides:
    - Suite registration and discovery
    - Lookup by number
    """

    def __init__(self):
        self._suites: Dict[int, VerificationSuite] = {}

    def register(self, suite: VerificationSuite) -> None:
        """Register a suite instance."""
        self._suites[suite.number] = suite

    def register_class(self, suite_class: Type[VerificationSuite]) -> None:
        """Register a suite class."""
        self.register(suite_class())

    def get(self, number: int) -> Optional[VerificationSuite]:
        """Get a suite by number."""
        return self._suites.get(number)

    def get_all(self) -> List[VerificationSuite]:
        """Get all registered suites, in order."""
        return [self._suites[n] for n in sorted(self._suites)]

    def get_numbers(self) -> List[int]:
        return sorted(self._suites)

    def has(self, number: int) -> bool:
        return number in self._suites


# Global suite registry instance
suite_registry = SuiteRegistry()


def register_suite(suite_class: Type[VerificationSuite]) -> Type[VerificationSuite]:
    """Decorator to register a suite class."""
    suite_registry.register_class(suite_class)
    return suite_class
