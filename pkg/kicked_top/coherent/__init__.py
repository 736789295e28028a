"""Spin coherent states, stereographic charts and P-representation moments."""

from .phase_point import (
    Chart,
    PhasePoint
)
from .states import (
    CoherentVector,
    CoherentExpectations,
    binomials,
    unnormalized_components,
    coherent_vector,
    coherent_expectations,
    holomorphic_derivative,
    differential_action,
    matrix_action
)
from .p_representation import (
    Observable,
    MomentVector,
    QuadratureSpec,
    moment_functions,
    moments_at,
    moments_from_delta,
    observable_coefficients,
    operator_coefficients,
    expectations_from_moments,
    density_from_moments,
    moments_from_density,
    identity_resolution_residual
)

__all__ = [
    'Chart',
    'PhasePoint',
    'CoherentVector',
    'CoherentExpectations',
    'binomials',
    'unnormalized_components',
    'coherent_vector',
    'coherent_expectations',
    'holomorphic_derivative',
    'differential_action',
    'matrix_action',
    'Observable',
    'MomentVector',
    'QuadratureSpec',
    'moment_functions',
    'moments_at',
    'moments_from_delta',
    'observable_coefficients',
    'operator_coefficients',
    'expectations_from_moments',
    'density_from_moments',
    'moments_from_density',
    'identity_resolution_residual'
]
