"""
Shared fixtures for the NAQ test suite
"""
import numpy as np
import pytest

from naq.algebra.polynomial import Polynomial
from naq.poisson import constructors


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the large certificate sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _no_thread_override(monkeypatch):
    monkeypatch.delenv("NAQ_THREADS", raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def x3():
    """x1, x2, x3 in dimension 3"""
    return tuple(Polynomial.variable(3, i) for i in range(3))


@pytest.fixture
def plane():
    return constructors.symplectic(2)


@pytest.fixture
def su2():
    return constructors.su2()


@pytest.fixture
def heisenberg():
    return constructors.heisenberg()


@pytest.fixture
def monopole():
    return constructors.monopole()


@pytest.fixture
def momenta():
    """p1, p2, p3 as the coordinates x4, x5, x6 of the monopole phase space"""
    return tuple(Polynomial.variable(6, 3 + i) for i in range(3))


BIVECTOR_CORPUS = {
    "zero": lambda: constructors.zero(2),
    "symplectic": lambda: constructors.symplectic(2),
    "su2": constructors.su2,
    "heisenberg": constructors.heisenberg,
    "monopole": constructors.monopole,
}
