"""Kicked-top Floquet operator and direct matrix evolution."""

from .floquet import (
    QUARTER_TURN,
    TopParams,
    StateKind,
    QuantumState,
    HeisenbergOrdering,
    floquet_operator,
    step_state,
    expectation,
    heisenberg_closed_form,
    heisenberg_map_residual
)

__all__ = [
    'QUARTER_TURN',
    'TopParams',
    'StateKind',
    'QuantumState',
    'HeisenbergOrdering',
    'floquet_operator',
    'step_state',
    'expectation',
    'heisenberg_closed_form',
    'heisenberg_map_residual'
]
