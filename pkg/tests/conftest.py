import pytest

from orthoposet import fixture, fixture_catalog


@pytest.fixture(scope="session")
def catalog():
    """All catalog fixtures, built once."""
    return {name: doc.build() for name, doc in fixture_catalog().items()}


@pytest.fixture(scope="session")
def L1():
    return fixture("L1").build()


@pytest.fixture(scope="session")
def L2():
    return fixture("L2").build()


@pytest.fixture(scope="session")
def L3():
    return fixture("L3").build()


@pytest.fixture(scope="session")
def P8():
    return fixture("P8").build()


@pytest.fixture(scope="session")
def P10():
    return fixture("P10").build()
