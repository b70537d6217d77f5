"""Selftest runner over the registered suites."""

import logging
from typing import List, Optional, Sequence

import numpy as np

from config import Settings, get_settings
from core.errors import ParameterError
from core.results import CheckResult
from verification.base import suite_registry

# Registers the suites
import verification.suites  # noqa: F401


# Configure logging
logger = logging.getLogger(__name__)


def run_selftest(
    numbers: Optional[Sequence[int]] = None,
    settings: Optional[Settings] = None,
    seed: Optional[int] = None,
) -> List[CheckResult]:
    """Run the acceptance suites in order.

    Args:
        numbers: Suite numbers to run (all when None)
        settings: Application settings (trials scale)
        seed: Randomness seed; settings.seed when None

    Returns:
        One CheckResult per suite
    """
    settings = settings or get_settings()
    seed = settings.seed if seed is None else seed
    selected = list(numbers) if numbers else suite_registry.get_numbers()
    unknown = [n for n in selected if not suite_registry.has(n)]
    if unknown:
        raise ParameterError(f"unknown suite numbers: {unknown}")

    results: List[CheckResult] = []
    for number in selected:
        suite = suite_registry.get(number)
        # one generator per suite so that subsets reproduce the full run
        rng = np.random.default_rng([seed, number])
        logger.info(f"[Selftest] running suite {number}: {suite.description}")
        results.append(suite.run(rng, settings))

    failed = [r.name for r in results if not r.ok]
    logger.info(f"[Selftest] {len(results) - len(failed)}/{len(results)} suites passed")
    return results
