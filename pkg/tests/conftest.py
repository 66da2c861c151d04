import pytest

from orbitbell import canonical_solid, oh_rep, s4_irrep
from orbitbell.orbits import SOLID_NAMES


@pytest.fixture(scope="session")
def s4():
    return s4_irrep()


@pytest.fixture(scope="session")
def oh():
    return oh_rep()


@pytest.fixture(scope="session")
def solids():
    return {name: canonical_solid(name) for name in SOLID_NAMES}
