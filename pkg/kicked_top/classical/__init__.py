"""Classical limit: the stroboscopic sphere map and ensemble evolution."""

from .sphere_map import (
    SpherePoint,
    classical_step,
    classical_step_array,
    classical_step_stereo,
    stereo_cartesian_gap
)
from .ensemble import (
    Ensemble,
    EnsembleSeries,
    sample_coherent_ensemble,
    evolve_ensemble
)

__all__ = [
    'SpherePoint',
    'classical_step',
    'classical_step_array',
    'classical_step_stereo',
    'stereo_cartesian_gap',
    'Ensemble',
    'EnsembleSeries',
    'sample_coherent_ensemble',
    'evolve_ensemble'
]
