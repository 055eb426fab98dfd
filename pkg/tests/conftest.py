import pytest

from logladder import build_ladder


@pytest.fixture(scope="session")
def ladder10_40():
    return build_ladder(10.0, 40)


@pytest.fixture(scope="session")
def ladder10_20():
    return build_ladder(10.0, 20)


@pytest.fixture(scope="session")
def ladder3_40():
    return build_ladder(3.0, 40)
