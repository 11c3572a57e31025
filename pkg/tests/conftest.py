import pytest

from supercasimir.materials import BcsParams, DrudeParams


@pytest.fixture(scope="session")
def al_params() -> BcsParams:
    return BcsParams(DrudeParams(1.03, 13.0, 0.1, 1.0), 1.2)


@pytest.fixture(scope="session")
def nbtin_params() -> BcsParams:
    return BcsParams(DrudeParams(1.0, 5.33, 0.465, 1.12), 13.6)


@pytest.fixture(scope="session")
def au_params() -> DrudeParams:
    return DrudeParams(6.3, 9.0, 0.035, 1.0)
