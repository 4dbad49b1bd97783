import pytest

from gkhopf.presentations import HopfPresentation, KParams, build
from gkhopf.scalars import Cyclo, make_root

from helpers import built_b


@pytest.fixture(scope="session")
def b23():
    """B(1, {2,3}, zeta_6, {0,1}) built once."""
    return built_b(1, (2, 3), 1, (0, 1))


@pytest.fixture(scope="session")
def b235():
    return built_b(1, (2, 3, 5), 1, (0, 1, 2))


@pytest.fixture(scope="session")
def k22():
    """Non-coprime K({2,2}, {-1,-1}, {0,1}, 2)."""
    params = KParams.make(2, (1, 1), (2, 2), [Cyclo.from_rational(-1)] * 2, (0, 1))
    return build(HopfPresentation.from_k(params))


@pytest.fixture(scope="session")
def a15():
    return build(HopfPresentation.a_family(1, make_root(5, 1)))


@pytest.fixture(scope="session")
def a25():
    return build(HopfPresentation.a_family(2, make_root(5, 1)))


@pytest.fixture(scope="session")
def c3():
    return build(HopfPresentation.c_family(3))
