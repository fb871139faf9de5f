import pytest

from resolvdim.graph import ComponentGraph


@pytest.fixture(scope="session")
def g22():
    return ComponentGraph(2, 2)


@pytest.fixture(scope="session")
def g23():
    return ComponentGraph(2, 3)


@pytest.fixture(scope="session")
def g24():
    return ComponentGraph(2, 4)


@pytest.fixture(scope="session")
def g32():
    return ComponentGraph(3, 2)


@pytest.fixture(scope="session")
def g33():
    return ComponentGraph(3, 3)


@pytest.fixture(scope="session")
def g42():
    return ComponentGraph(4, 2)
