"""One-period propagators acting on P-representation moments."""

from .rotation import (
    EXPORT_CAP,
    EXACT_CAP,
    RotationMomentMatrix,
    rotation_factor,
    rotation_matrix,
    rotate_moments,
    exact_rotation_entries,
    exact_oracle_residual,
    export_rotation_matrix,
    import_rotation_matrix
)
from .kick import (
    KickVariant,
    ClassicalKickVariant,
    DEFAULT_KQ_VARIANT,
    DEFAULT_KC_VARIANT,
    KickSpectrum,
    ClassicalMomentStep,
    kick_spectrum,
    quantum_step,
    classical_kick_multiplier,
    classical_step_moments,
    classical_factorization_residual,
    kick_generator_action
)

__all__ = [
    'EXPORT_CAP',
    'EXACT_CAP',
    'RotationMomentMatrix',
    'rotation_factor',
    'rotation_matrix',
    'rotate_moments',
    'exact_rotation_entries',
    'exact_oracle_residual',
    'export_rotation_matrix',
    'import_rotation_matrix',
    'KickVariant',
    'ClassicalKickVariant',
    'DEFAULT_KQ_VARIANT',
    'DEFAULT_KC_VARIANT',
    'KickSpectrum',
    'ClassicalMomentStep',
    'kick_spectrum',
    'quantum_step',
    'classical_kick_multiplier',
    'classical_step_moments',
    'classical_factorization_residual',
    'kick_generator_action'
]
