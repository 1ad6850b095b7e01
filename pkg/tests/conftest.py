import pytest

from chipfire import fixtures


@pytest.fixture(scope="session")
def diamond():
    return fixtures.diamond_pair()


@pytest.fixture(scope="session")
def c6_negative():
    return fixtures.negative_c6_pair()
