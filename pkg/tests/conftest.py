"""Shared fixtures for the ablab test suite."""

import numpy as np
import pytest

from ablab.core.vectors import Disk, Vec3
from ablab.sources.coil import ToroidalCoil
from ablab.sources.loop import CurrentLoop
from ablab.sources.ring import InertFluxRing
from ablab.validation.core import ValidationLevel, set_validation_level


@pytest.fixture(autouse=True)
def normal_validation_level():
    """Every test starts and ends at the NORMAL validation level."""
    set_validation_level(ValidationLevel.NORMAL)
    yield
    set_validation_level(ValidationLevel.NORMAL)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def unit_loop():
    return CurrentLoop(center=Vec3(), unit_normal=Vec3(z=1.0), radius=1.0, current=0.01)


@pytest.fixture
def small_coil():
    """Coarse coil: cheap to evaluate, same geometry as the bundled scenario."""
    return ToroidalCoil(major_radius=1.0, minor_radius=0.1, loop_count=36, linear_charge_density=1.0, liquid_speed=0.01)


@pytest.fixture
def ring():
    return InertFluxRing(major_radius=1.0, minor_radius=0.1, loop_count=120, total_flux=0.6 * np.pi)


@pytest.fixture
def xy_disk():
    return Disk(center=Vec3(), unit_normal=Vec3(z=1.0), radius=2.0)
