import pytest

from src.cmds import shared
from src.fields import field_of_order, make_prime_field


@pytest.fixture
def gf2():
    return make_prime_field(2)


@pytest.fixture
def gf3():
    return make_prime_field(3)


@pytest.fixture
def gf4():
    return field_of_order(4)


@pytest.fixture
def gf9():
    return field_of_order(9)


@pytest.fixture(autouse=True)
def quiet(monkeypatch):
    monkeypatch.setattr(shared, "VERBOSE", False)
    monkeypatch.delenv("TSRFORGE_CEILING", raising=False)
