import numpy as np
import pytest

from kicked_top.coherent import PhasePoint
from kicked_top.config import ExperimentConfig


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=[1, 2, 3, 10])
def two_j(request):
    return request.param


@pytest.fixture
def generic_point():
    """Start point away from poles and fixed points."""
    return PhasePoint.from_angles(1.0, 0.5)


@pytest.fixture
def small_config(tmp_path):
    def make(**fields):
        defaults = dict(two_j=4, k=3.0, steps=6, output_dir=str(tmp_path / 'out'))
        defaults.update(fields)
        return ExperimentConfig(**defaults)
    return make
