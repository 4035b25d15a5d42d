import pytest

from polysphere import hexagon_space, l1_space, linf_space


@pytest.fixture(scope="session")
def hexagon():
    return hexagon_space()


@pytest.fixture(scope="session")
def cube3():
    return linf_space(3)


@pytest.fixture(scope="session")
def cross2():
    return l1_space(2)


@pytest.fixture(scope="session")
def square():
    return linf_space(2)


@pytest.fixture(scope="session")
def small_catalog(hexagon):
    """The concrete catalog spaces used by the property suites."""
    spaces = [hexagon]
    for n in range(1, 5):
        spaces.append(l1_space(n))
        spaces.append(linf_space(n))
    return spaces
