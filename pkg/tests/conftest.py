import pytest

from dasq import get_census


@pytest.fixture(scope="session")
def census():
    return get_census()
