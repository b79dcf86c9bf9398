import pytest
from hypothesis import HealthCheck, settings

from polycell.corpus import builders

settings.register_profile(
    "polycell", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("polycell")


@pytest.fixture
def triangle():
    return builders.polygon(3)


@pytest.fixture
def pentagon():
    return builders.polygon(5)


@pytest.fixture
def hexagon():
    return builders.polygon(6)


@pytest.fixture
def tetrahedron():
    return builders.tetrahedron()


@pytest.fixture
def k3():
    return builders.complete(3)
