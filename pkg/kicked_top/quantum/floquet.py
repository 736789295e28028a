import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict

import numpy as np
from scipy.linalg import eigvalsh

from ..algebra import SpinJ, conjugate, make_spin_rep, unitary_exp
from ..coherent import PhasePoint, coherent_vector
from ..exceptions import ClosedFormError, InputError
from ..utils.logging_utils import get_logger

logger = get_logger(__name__)

QUARTER_TURN = math.pi / 2


@dataclass(frozen=True)
class TopParams:
    """Kicked top H = (p/T) J_y + (k/2j) J_z^2 sum_n delta(t - nT), hbar = 1."""
    j: SpinJ
    k: float
    p: float = QUARTER_TURN

    def __post_init__(self):
        if not isinstance(self.j, SpinJ):
            object.__setattr__(self, 'j', SpinJ(self.j))
        if self.j.two_j < 1:
            raise InputError("The kick strength is scaled by 1/2j; two_j must be at least 1")
        if not (math.isfinite(self.k) and math.isfinite(self.p)):
            raise InputError(f"Kick strength and rotation angle must be finite (k={self.k}, p={self.p})")


class StateKind(Enum):
    PURE = 'pure'
    DENSITY = 'density'


@dataclass(frozen=True, eq=False)
class QuantumState:
    j: SpinJ
    kind: StateKind
    data: np.ndarray
    atol: float = 1e-9

    def __post_init__(self):
        data = np.asarray(self.data, dtype=complex)
        dim = self.j.dim
        if self.kind is StateKind.PURE:
            if data.shape != (dim,):
                raise InputError(f"Pure state needs shape ({dim},), got {data.shape}")
            if abs(np.linalg.norm(data) - 1) > self.atol:
                raise InputError("Pure state is not normalized")
        else:
            if data.shape != (dim, dim):
                raise InputError(f"Density matrix needs shape ({dim}, {dim}), got {data.shape}")
            if not np.allclose(data, data.conj().T, rtol=0.0, atol=self.atol):
                raise InputError("Density matrix is not Hermitian")
            if abs(np.trace(data) - 1) > self.atol:
                raise InputError("Density matrix does not have unit trace")
            if eigvalsh((data + data.conj().T) / 2).min() < -self.atol:
                raise InputError("Density matrix is not positive semidefinite")
        object.__setattr__(self, 'data', data)

    @classmethod
    def pure(cls, vector: np.ndarray) -> 'QuantumState':
        vector = np.asarray(vector)
        return cls(SpinJ(vector.shape[0] - 1), StateKind.PURE, vector)

    @classmethod
    def density(cls, rho: np.ndarray) -> 'QuantumState':
        rho = np.asarray(rho)
        return cls(SpinJ(rho.shape[0] - 1), StateKind.DENSITY, rho)

    @classmethod
    def coherent(cls, j, point: PhasePoint, as_density: bool = True) -> 'QuantumState':
        vector = coherent_vector(j, point).components
        return cls.density(np.outer(vector, vector.conj())) if as_density else cls.pure(vector)

    def to_density(self) -> np.ndarray:
        if self.kind is StateKind.DENSITY:
            return self.data
        return np.outer(self.data, self.data.conj())

    def purity(self) -> float:
        rho = self.to_density()
        return float(np.trace(rho @ rho).real)


def floquet_operator(params: TopParams) -> np.ndarray:
    """U = exp(-i (k/2j) J_z^2) exp(-i p J_y)."""
    rep = make_spin_rep(params.j)
    kick = unitary_exp(rep.jz @ rep.jz, params.k / params.j.two_j)
    rotation = unitary_exp(rep.jy, params.p)
    return kick @ rotation


def _check_dimension(state: QuantumState, matrix: np.ndarray) -> None:
    matrix = np.asarray(matrix)
    if matrix.shape != (state.j.dim, state.j.dim):
        raise InputError(f"Operator of shape {matrix.shape} does not act on 2j+1 = {state.j.dim}")


def step_state(state: QuantumState, u: np.ndarray) -> QuantumState:
    """psi -> U psi, rho -> U rho U^dagger."""
    _check_dimension(state, u)
    if state.kind is StateKind.PURE:
        data = u @ state.data
    else:
        data = u @ state.data @ u.conj().T
    return QuantumState(state.j, state.kind, data, state.atol)


def expectation(state: QuantumState, observable: np.ndarray) -> complex:
    """tr(rho A), or <psi|A|psi> for a pure state."""
    _check_dimension(state, observable)
    if state.kind is StateKind.PURE:
        return complex(np.vdot(state.data, observable @ state.data))
    return complex(np.trace(state.data @ observable))


class HeisenbergOrdering(Enum):
    ROTATED = 'rotated'
    UNROTATED = 'unrotated'


def heisenberg_closed_form(params: TopParams,
                           ordering: HeisenbergOrdering = HeisenbergOrdering.ROTATED) -> Dict[str, np.ndarray]:
    """
    One-period Heisenberg images of J_x, J_y, J_z at p = pi/2.

    J_+'' = B, B = (J_z + i J_y) exp(-i (k/j)(J_x - 1/2)), with the hermitian
    conjugate taken of the whole product; J_z'' = -J_x. The UNROTATED ordering
    puts J_x + i J_y in front instead.

    Raises:
        ClosedFormError: when p is not pi/2
    """
    if not math.isclose(params.p, QUARTER_TURN, rel_tol=0.0, abs_tol=1e-12):
        raise ClosedFormError(f"Heisenberg closed form valid only at p=π/2 (got p={params.p})")
    rep = make_spin_rep(params.j)
    torsion = unitary_exp(rep.jx - 0.5 * rep.identity, params.k / params.j.j)
    front = rep.jz if ordering is HeisenbergOrdering.ROTATED else rep.jx
    raised = (front + 1j * rep.jy) @ torsion
    lowered = raised.conj().T
    return {
        'x': (raised + lowered) / 2,
        'y': (raised - lowered) / 2j,
        'z': -rep.jx,
    }


def heisenberg_map_residual(params: TopParams,
                            ordering: HeisenbergOrdering = HeisenbergOrdering.ROTATED) -> float:
    """Max Frobenius distance between the closed forms and U^dagger J_a U."""
    closed = heisenberg_closed_form(params, ordering)
    rep = make_spin_rep(params.j)
    u = floquet_operator(params)
    residual = max(float(np.linalg.norm(closed[a] - conjugate(u, rep.by_name(a)))) for a in 'xyz')
    logger.debug(f"Heisenberg residual 2j={params.j.two_j} k={params.k} {ordering.value}: {residual:.3e}")
    return residual
