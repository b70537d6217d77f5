"""Tests for the suite registry and the selftest runner."""

import numpy as np
import pytest

from config import Settings
from core.errors import ParameterError, VerificationFailure
from core.results import CheckStatus
from verification import (
    SuiteRegistry,
    VerificationSuite,
    code_grid,
    grid_subspaces,
    run_selftest,
    suite_registry,
)


class BrokenSuite(VerificationSuite):
    number = 42
    name = "broken"
    description = "Always finds a counterexample"

    def check(self, rng, settings):
        raise VerificationFailure("counterexample")


class TestRegistry:
    def test_all_suites_registered(self):
        assert suite_registry.get_numbers() == list(range(1, 10))
        names = [s.name for s in suite_registry.get_all()]
        assert len(set(names)) == 9

    def test_local_registry(self):
        registry = SuiteRegistry()
        registry.register_class(BrokenSuite)
        assert registry.has(42)
        assert not registry.has(1)
        assert registry.get(42).name == "broken"

    def test_failure_becomes_result(self):
        result = BrokenSuite().run(np.random.default_rng(0), Settings())
        assert result.status == CheckStatus.FAILED
        assert not result.ok
        assert result.metadata["error_type"] == "VerificationFailure"
        assert "counterexample" in str(result)


class TestGrid:
    def test_grid_subspaces(self, ctx_a, ctx_b):
        for ctx in (ctx_a, ctx_b):
            assert [V.dimension for V in grid_subspaces(ctx)] == [0, 1, 1, 2]

    def test_code_grid_size(self, ctx_a):
        grid = code_grid(ctx_a)
        assert len(grid) == 2 * 4 + 4 * 4
        assert all(len(points) == len(spaces) for points, spaces in grid)


class TestRunner:
    def test_subset_passes(self):
        settings = Settings(trials=0.01)
        results = run_selftest([1, 3], settings, seed=7)
        assert [r.metadata["number"] for r in results] == [1, 3]
        assert all(r.ok for r in results)
        assert all(r.checked > 0 for r in results)

    def test_subsets_are_reproducible(self):
        settings = Settings(trials=0.01)
        first = run_selftest([3], settings, seed=11)[0]
        again = run_selftest([3], settings, seed=11)[0]
        assert first.checked == again.checked
        assert first.status == again.status

    def test_unknown_suite(self):
        with pytest.raises(ParameterError):
            run_selftest([99], Settings(trials=0.01))

    def test_duality_suite_walks_the_whole_grid(self, ctx_a, ctx_b):
        expected = sum(
            sum(V.dimension for V in spaces)
            for ctx in (ctx_a, ctx_b)
            for _, spaces in code_grid(ctx)
        )
        result = run_selftest([9], Settings(trials=0.01), seed=3)[0]
        assert result.ok
        assert result.checked == expected
