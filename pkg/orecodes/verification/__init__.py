"""Acceptance suites behind a registry, used by the selftest command."""

from verification.base import SuiteRegistry, VerificationSuite, register_suite, suite_registry
from verification.contexts import code_grid, grid_subspaces, standard_contexts
from verification.runner import run_selftest

__all__ = [
    "SuiteRegistry",
    "VerificationSuite",
    "register_suite",
    "suite_registry",
    "code_grid",
    "grid_subspaces",
    "standard_contexts",
    "run_selftest",
]
