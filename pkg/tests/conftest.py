import random

import pytest

from aspectral import default_alpha_grid


@pytest.fixture(scope="session")
def alpha_grid():
    return list(default_alpha_grid())


@pytest.fixture(scope="session")
def small_grid():
    """Cheaper grid for per-module tests; the acceptance suite uses the full one."""
    return [0.0, 0.3, 0.7, 0.99]


@pytest.fixture()
def rng():
    return random.Random(20240817)
