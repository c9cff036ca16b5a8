import random

import pytest
from hypothesis import HealthCheck, settings

from qgr.presentation import Algebra

settings.register_profile("qgr", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qgr")


@pytest.fixture(scope="session")
def gl2():
    return Algebra(2, "gl")


@pytest.fixture(scope="session")
def gl3():
    return Algebra(3, "gl")


@pytest.fixture(scope="session")
def sl3():
    return Algebra(3, "sl")


@pytest.fixture
def rng():
    return random.Random(1234)
