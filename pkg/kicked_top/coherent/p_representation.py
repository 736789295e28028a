"""
P-representation moments.

For rho = integral d^2gamma (1 + |gamma|^2)^-2 P |gamma><gamma| the basic
dynamical variables are the averages <f_nm> of

    f_nm = gamma^n conj(gamma)^m / (1 + |gamma|^2)^(2j),   n, m = 0..2j.

Expanding the coherent projector in the |j, j-r> basis gives

    rho_rs = sqrt(C(2j, r) C(2j, s)) <f_rs>

for every P, which is what ``density_from_moments`` and
``moments_from_density`` use.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

import numpy as np
from scipy.special import comb, roots_legendre

from ..algebra import SpinJ
from ..exceptions import InputError
from .phase_point import PhasePoint
from .states import CoherentExpectations, binomials, coherent_vector


class Observable(Enum):
    JZ = 'Jz'
    JMINUS = 'Jminus'
    JPLUS = 'Jplus'


@dataclass(frozen=True, eq=False)
class MomentVector:
    """Moments <f_nm>, values[n, m] with n the power of gamma."""
    j: SpinJ
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.j.dim, self.j.dim):
            raise InputError(
                f"Moment array of shape {values.shape} does not match 2j+1 = {self.j.dim}")
        object.__setattr__(self, 'values', values)

    @property
    def two_j(self) -> int:
        return self.j.two_j

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.values - self.values.conj().T)))

    def with_values(self, values: np.ndarray) -> 'MomentVector':
        return MomentVector(self.j, values)


def moment_functions(two_j: int, x, y, z) -> np.ndarray:
    """
    f_nm at Cartesian points, shape ``x.shape + (2j+1, 2j+1)``.

    Uses f_nm = 2^-2j (X+iY)^(n-m) (1-Z)^m (1+Z)^(2j-n) for n >= m and the
    conjugate for n < m, which is finite on the whole sphere.
    """
    x, y, z = (np.asarray(c, dtype=float)[..., None, None] for c in (x, y, z))
    index = np.arange(two_j + 1)
    n = index[:, None]
    m = index[None, :]
    w = x + 1j * y
    lifted = np.where(n >= m, np.power(w, np.abs(n - m)), np.power(np.conj(w), np.abs(n - m)))
    low = np.minimum(n, m)
    high = np.maximum(n, m)
    return lifted * np.power(1 - z, low) * np.power(1 + z, two_j - high) / 2.0 ** two_j


def moments_at(two_j: int, point: PhasePoint) -> np.ndarray:
    """f_nm(gamma) at a single phase point, as a (2j+1, 2j+1) array."""
    return moment_functions(two_j, *point.cartesian())


def moments_from_delta(j, point: PhasePoint) -> MomentVector:
    """Moments of a P concentrated at ``point``: <f_nm> = f_nm(gamma0)."""
    spin = j if isinstance(j, SpinJ) else SpinJ(j)
    return MomentVector(spin, moments_at(spin.two_j, point))


def _binomial(n: int, k: int) -> float:
    return float(comb(n, k, exact=True)) if 0 <= k <= n else 0.0


def observable_coefficients(j, which: Observable) -> Dict[Tuple[int, int], float]:
    """
    Coefficients c_nm with <A> = sum c_nm <f_nm> for A in {J_z, J_-, J_+}.

    From <<gamma|J_z|gamma>> = j (1 - u)(1 + u)^(2j-1) and
    <<gamma|J_-|gamma>> = 2j conj(gamma) (1 + u)^(2j-1), u = |gamma|^2,
    expanded binomially over monomials gamma^n conj(gamma)^m.
    """
    spin = j if isinstance(j, SpinJ) else SpinJ(j)
    which = Observable(which)
    two_j = spin.two_j
    coefficients = {}
    if two_j == 0:
        return coefficients
    for n in range(two_j + 1):
        if which is Observable.JZ:
            value = spin.j * (_binomial(two_j - 1, n) - _binomial(two_j - 1, n - 1))
            key = (n, n)
        elif n < two_j:
            value = two_j * _binomial(two_j - 1, n)
            key = (n, n + 1) if which is Observable.JMINUS else (n + 1, n)
        else:
            continue
        if value != 0:
            coefficients[key] = value
    return coefficients


def operator_coefficients(operator: np.ndarray) -> np.ndarray:
    """Dense c_nm = sqrt(C(2j,n) C(2j,m)) A[m, n] for an arbitrary operator A."""
    operator = np.asarray(operator)
    root = np.sqrt(binomials(operator.shape[0] - 1))
    return np.outer(root, root) * operator.T


def average(moments: MomentVector, coefficients: Dict[Tuple[int, int], float]) -> complex:
    return complex(sum(c * moments.values[n, m] for (n, m), c in coefficients.items()))


def expectations_from_moments(moments: MomentVector) -> CoherentExpectations:
    """<J_+>, <J_->, <J_z> reconstructed from a moment vector."""
    return CoherentExpectations(
        jplus=average(moments, observable_coefficients(moments.j, Observable.JPLUS)),
        jminus=average(moments, observable_coefficients(moments.j, Observable.JMINUS)),
        jz=average(moments, observable_coefficients(moments.j, Observable.JZ)).real,
    )


def density_from_moments(moments: MomentVector) -> np.ndarray:
    root = np.sqrt(binomials(moments.two_j))
    return np.outer(root, root) * moments.values


def moments_from_density(rho: np.ndarray) -> MomentVector:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InputError(f"Density matrix must be square, got shape {rho.shape}")
    two_j = rho.shape[0] - 1
    root = np.sqrt(binomials(two_j))
    return MomentVector(SpinJ(two_j), rho / np.outer(root, root))


@dataclass(frozen=True)
class QuadratureSpec:
    """Gauss-Legendre nodes in cos(theta) times uniform trapezoid nodes in phi."""
    n_theta: int
    n_phi: int

    def __post_init__(self):
        if self.n_theta < 1 or self.n_phi < 1:
            raise InputError("Quadrature needs at least one node per axis")

    @classmethod
    def default_for(cls, two_j: int) -> 'QuadratureSpec':
        # (4j + 8) nodes per axis
        return cls(2 * two_j + 8, 2 * two_j + 8)


def identity_resolution_residual(j, quadrature: QuadratureSpec = None) -> float:
    """
    Max-abs deviation of (2j+1)/pi integral d^2gamma (1 + |gamma|^2)^-2 |gamma><gamma|
    from the identity.

    On the sphere the measure is (2j+1)/(4 pi) dcos(theta) dphi.
    """
    spin = j if isinstance(j, SpinJ) else SpinJ(j)
    quadrature = quadrature or QuadratureSpec.default_for(spin.two_j)
    nodes, weights = roots_legendre(quadrature.n_theta)
    thetas = np.arccos(nodes)
    phis = 2 * np.pi * np.arange(quadrature.n_phi) / quadrature.n_phi
    phi_weight = 2 * np.pi / quadrature.n_phi

    total = np.zeros((spin.dim, spin.dim), dtype=complex)
    for theta, weight in zip(thetas, weights):
        vectors = np.array([coherent_vector(spin, PhasePoint.from_angles(theta, phi)).components
                            for phi in phis])
        total += weight * phi_weight * (vectors.T @ vectors.conj())
    total *= spin.dim / (4 * np.pi)
    return float(np.max(np.abs(total - np.eye(spin.dim))))
