"""
Kick multipliers acting diagonally on moments.

Quantum:   <f_nm>'' = K^Q[n, m] <f_nm>'   with   K^Q[n, m] = exp(i (k/2j) lambda[n, m]),
           lambda[n, m] = (j - m)^2 - (j - n)^2.
Classical: f_nm(gamma'') = K^C[n, m] f_nm(M(gamma)), K^C[n, m] = exp(-i k X (n - m)),
           X = (gamma + gamma*) / (1 + |gamma|^2) taken at the pre-turn point.
"""
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from ..algebra import SpinJ
from ..classical import classical_step_stereo
from ..coherent import MomentVector, PhasePoint, moments_at
from ..exceptions import FactorizationError, InputError
from .rotation import RotationMomentMatrix, rotate_moments


class KickVariant(Enum):
    """EIGENVALUE: exp(i (k/2j) lambda_nm). TENSOR: k^Q[n] conj(k^Q[m]), its conjugate."""
    EIGENVALUE = 'eigen'
    TENSOR = 'tensor'


class ClassicalKickVariant(Enum):
    """TENSOR: exp(-i k X (n - m)). PAPER: exp(-i k X (m - n) / 2j)."""
    TENSOR = 'tensor'
    PAPER = 'paper'


# chosen by the density-matrix comparison in harness.validation.select_kq_variant
DEFAULT_KQ_VARIANT = KickVariant.EIGENVALUE
DEFAULT_KC_VARIANT = ClassicalKickVariant.TENSOR

FACTORIZATION_ATOL = 1e-10


def _spin(j) -> SpinJ:
    return j if isinstance(j, SpinJ) else SpinJ(j)


@dataclass(frozen=True, eq=False)
class KickSpectrum:
    j: SpinJ
    k: float
    lam: np.ndarray
    kq_diag: np.ndarray
    variant: KickVariant

    @property
    def multiplier(self) -> np.ndarray:
        """K^Q[n, m] for the selected variant."""
        if self.variant is KickVariant.EIGENVALUE:
            return np.exp(1j * self.k / self.j.two_j * self.lam)
        return np.outer(self.kq_diag, self.kq_diag.conj())


def kick_spectrum(j, k: float, variant: KickVariant = DEFAULT_KQ_VARIANT) -> KickSpectrum:
    spin = _spin(j)
    if spin.two_j < 1:
        raise InputError("The kick is scaled by 1/2j; two_j must be at least 1")
    offset = spin.j - np.arange(spin.dim)
    lam = offset[None, :] ** 2 - offset[:, None] ** 2
    kq_diag = np.exp(1j * k * offset ** 2 / spin.two_j)
    return KickSpectrum(spin, k, lam, kq_diag, KickVariant(variant))


def quantum_step(rotation: RotationMomentMatrix, spectrum: KickSpectrum, moments: MomentVector) -> MomentVector:
    """One period on moments: quarter turn through R, then the kick multiplier."""
    if spectrum.j.two_j != moments.two_j:
        raise InputError(f"Kick for 2j={spectrum.j.two_j} applied to moments for 2j={moments.two_j}")
    rotated = rotate_moments(rotation, moments)
    return rotated.with_values(spectrum.multiplier * rotated.values)


def classical_kick_multiplier(j, k: float, point: PhasePoint,
                              variant: ClassicalKickVariant = DEFAULT_KC_VARIANT) -> np.ndarray:
    """K^C[n, m] = k^C[n] conj(k^C[m]) with k^C[n] = exp(-i k n X), X at ``point``."""
    spin = _spin(j)
    x, _, _ = point.cartesian()
    index = np.arange(spin.dim)
    difference = index[:, None] - index[None, :]
    if ClassicalKickVariant(variant) is ClassicalKickVariant.TENSOR:
        return np.exp(-1j * k * x * difference)
    return np.exp(-1j * k * x * (-difference) / spin.two_j)


class ClassicalMomentStep(NamedTuple):
    point: PhasePoint
    moments: np.ndarray
    residual: float


def classical_step_moments(rotation: RotationMomentMatrix, j, k: float, point: PhasePoint,
                           variant: ClassicalKickVariant = DEFAULT_KC_VARIANT,
                           strict: bool = True, atol: float = FACTORIZATION_ATOL) -> ClassicalMomentStep:
    """
    Advance ``point`` by the classical map and return f_nm at the image.

    ``residual`` measures f_nm(gamma'') against K^C[n, m] sum_rs R f_rs(gamma).

    Raises:
        FactorizationError: with ``strict`` when the residual exceeds ``atol``
    """
    spin = _spin(j)
    if rotation.two_j != spin.two_j:
        raise InputError(f"Rotation matrix for 2j={rotation.two_j} used at 2j={spin.two_j}")
    before = MomentVector(spin, moments_at(spin.two_j, point))
    image = classical_step_stereo(point, k)
    after = moments_at(spin.two_j, image)
    predicted = classical_kick_multiplier(spin, k, point, variant) * rotate_moments(rotation, before).values
    residual = float(np.max(np.abs(after - predicted)))
    if strict and residual > atol:
        raise FactorizationError(f"Classical kick factorization off by {residual:.3e} at gamma={point.gamma}")
    return ClassicalMomentStep(image, after, residual)


def classical_factorization_residual(rotation: RotationMomentMatrix, k: float, start: PhasePoint,
                                     steps: int,
                                     variant: ClassicalKickVariant = DEFAULT_KC_VARIANT) -> float:
    """Worst factorization residual along a classical trajectory."""
    worst = 0.0
    point = start
    for _ in range(steps):
        result = classical_step_moments(rotation, rotation.j, k, point, variant, strict=False)
        worst = max(worst, result.residual)
        point = result.point
    return worst


def kick_generator_action(two_j: int, n: int, m: int, gamma: complex, h: float = 1e-4) -> complex:
    """
    Apply the second-order kick generator L^dagger to f_nm at gamma.

        L^dagger = (1/2j) [ (2j + 1 - 4j / (1 + g g*)) (g d/dg - g* d/dg*)
                            + g^2 d^2/dg^2 - g*^2 d^2/dg*^2 ]

    g and g* are treated as independent variables; derivatives are central
    differences along each.
    """
    def f(a, b):
        return a ** n * b ** m / (1 + a * b) ** two_j

    g, gs = complex(gamma), complex(gamma).conjugate()
    centre = f(g, gs)
    d_g = (f(g + h, gs) - f(g - h, gs)) / (2 * h)
    d_gs = (f(g, gs + h) - f(g, gs - h)) / (2 * h)
    dd_g = (f(g + h, gs) - 2 * centre + f(g - h, gs)) / h ** 2
    dd_gs = (f(g, gs + h) - 2 * centre + f(g, gs - h)) / h ** 2
    first = (two_j + 1 - 2 * two_j / (1 + g * gs)) * (g * d_g - gs * d_gs)
    second = g ** 2 * dd_g - gs ** 2 * dd_gs
    return (first + second) / two_j
