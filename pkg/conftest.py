import pytest
from hypothesis import settings

from app.scalars import field_preset
from app.heckesym import drinfeld_jimbo, hietarinta_counterexample, one_dim, super_symmetry

# Профиль для свойств: точная арифметика медленная, дедлайны отключены
settings.register_profile("hecke", max_examples=25, deadline=None)
settings.load_profile("hecke")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale checks, deselect with -m 'not slow'")


# --- Поля ---

@pytest.fixture(scope="session")
def field_two():
    return field_preset("Q", "2")


@pytest.fixture(scope="session")
def field_minus_one():
    return field_preset("Q", "-1")


@pytest.fixture(scope="session")
def field_one():
    return field_preset("Q", "1")


@pytest.fixture(scope="session")
def gauss():
    """q = i, i^2 = -1"""
    return field_preset("gauss")


@pytest.fixture(scope="session")
def cyclo3():
    """q: первообразный кубический корень из 1"""
    return field_preset("cyclo3")


@pytest.fixture(scope="session")
def field_zero():
    return field_preset("zero")


# --- Симметрии ---

@pytest.fixture(scope="session")
def r2(field_two):
    return drinfeld_jimbo(field_two, 2)


@pytest.fixture(scope="session")
def r3(field_two):
    return drinfeld_jimbo(field_two, 3)


@pytest.fixture(scope="session")
def line(field_two):
    return one_dim(field_two)


@pytest.fixture(scope="session")
def super11(field_one):
    return super_symmetry(field_one, 1, 1)


@pytest.fixture(scope="session")
def counterexample(gauss):
    return hietarinta_counterexample(gauss)
