import pytest

from liestab import build


@pytest.fixture(scope="session")
def sl2():
    return build("A", 1)


@pytest.fixture(scope="session")
def sl3():
    return build("A", 2)


@pytest.fixture(scope="session")
def so5():
    return build("B", 2)


@pytest.fixture(scope="session")
def sp6():
    return build("C", 3)


@pytest.fixture(scope="session")
def so8():
    return build("D", 4)


@pytest.fixture(scope="session")
def g2():
    return build("G", 2)
