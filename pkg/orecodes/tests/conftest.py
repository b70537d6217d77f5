"""Shared fixtures: the standard contexts and a seeded generator."""
import sys
from pathlib import Path

import numpy as np
import pytest

# Add the package directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from verification.contexts import standard_contexts  # noqa: E402


@pytest.fixture
def ctx_a():
    """F_9 / F_3, theta = Frobenius, delta = 0."""
    return standard_contexts()["CTX-A"]


@pytest.fixture
def ctx_b():
    """F_2(t) / F_2(t^2), delta = d/dt."""
    return standard_contexts()["CTX-B"]


@pytest.fixture
def ctx_c():
    """F_3(t) / F_3(t^3), delta = d/dt."""
    return standard_contexts()["CTX-C"]


@pytest.fixture
def ctx_d():
    """F_9 / F_3, delta = i (theta - id)."""
    return standard_contexts()["CTX-D"]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def i_elem(ctx_a):
    return ctx_a.K.gen


@pytest.fixture
def t_elem(ctx_b):
    return ctx_b.K.gen
