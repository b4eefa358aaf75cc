import pytest

from orifold import ActuatorConfig, PROTOTYPE, TestbedConfig


@pytest.fixture
def prototype():
    return PROTOTYPE


@pytest.fixture
def actuator():
    return ActuatorConfig()


@pytest.fixture
def bench():
    return TestbedConfig()
