from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.special import comb

from ..algebra import SpinJ, make_spin_rep
from ..exceptions import ChartError, InputError
from .phase_point import PhasePoint


@lru_cache(maxsize=128)
def binomials(two_j: int) -> np.ndarray:
    """C(2j, r) for r = 0..2j as floats."""
    out = comb(two_j, np.arange(two_j + 1), exact=False)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class CoherentVector:
    j: SpinJ
    normalized: bool
    components: np.ndarray

    def norm_squared(self) -> float:
        return float(np.vdot(self.components, self.components).real)

    def projector(self) -> np.ndarray:
        return np.outer(self.components, self.components.conj())


class CoherentExpectations(NamedTuple):
    jplus: complex
    jminus: complex
    jz: float

    @property
    def jx(self) -> float:
        return ((self.jplus + self.jminus) / 2).real

    @property
    def jy(self) -> float:
        return ((self.jplus - self.jminus) / 2j).real


def _spin(j) -> SpinJ:
    return j if isinstance(j, SpinJ) else SpinJ(j)


def unnormalized_components(two_j: int, gamma: complex) -> np.ndarray:
    """Components of exp(gamma J_-)|j, j>: sqrt(C(2j, r)) gamma^r."""
    r = np.arange(two_j + 1)
    return np.sqrt(binomials(two_j)) * np.power(complex(gamma), r)


def coherent_vector(j, point: PhasePoint, normalized: bool = True) -> CoherentVector:
    """
    Spin coherent state at ``point``.

    The normalized vector is built from half angles, so it exists on the whole
    sphere. The unnormalized vector needs a finite North-chart gamma.

    Raises:
        ChartError: for the unnormalized vector at the south pole
    """
    spin = _spin(j)
    if not normalized:
        if point.is_south_pole:
            raise ChartError("Unnormalized coherent state at the south pole: chart conversion required")
        gamma = point.north_gamma()
        return CoherentVector(spin, False, unnormalized_components(spin.two_j, gamma))

    r = np.arange(spin.dim)
    half = point.theta / 2
    lifted = np.sin(half) * np.exp(1j * point.phi)
    components = (np.sqrt(binomials(spin.two_j))
                  * np.power(lifted, r)
                  * np.power(np.cos(half), spin.two_j - r))
    return CoherentVector(spin, True, components)


def coherent_expectations(j, point: PhasePoint) -> CoherentExpectations:
    """<J_+>, <J_->, <J_z> in the normalized coherent state at ``point``."""
    spin = _spin(j)
    x, y, z = point.cartesian()
    # on the North chart 2 gamma / (1 + |gamma|^2) = X + iY and (1 - |gamma|^2) / (1 + |gamma|^2) = Z
    return CoherentExpectations(jplus=spin.j * complex(x, y),
                                jminus=spin.j * complex(x, -y),
                                jz=spin.j * z)


def holomorphic_derivative(two_j: int, gamma: complex, h: float = 1e-6) -> np.ndarray:
    """Central difference of |gamma>> in gamma (the vector is holomorphic)."""
    return (unnormalized_components(two_j, gamma + h)
            - unnormalized_components(two_j, gamma - h)) / (2 * h)


def differential_action(two_j: int, gamma: complex, which: str, h: float = 1e-6) -> np.ndarray:
    """
    Apply the differential form of J_-, J_+ or J_z to |gamma>>.

    J_- -> d/dgamma, J_+ -> 2j gamma - gamma^2 d/dgamma, J_z -> j - gamma d/dgamma
    """
    vector = unnormalized_components(two_j, gamma)
    derivative = holomorphic_derivative(two_j, gamma, h)
    if which == 'minus':
        return derivative
    if which == 'plus':
        return two_j * gamma * vector - gamma ** 2 * derivative
    if which == 'z':
        return two_j / 2 * vector - gamma * derivative
    raise InputError(f"Unknown differential action: {which}")


def matrix_action(two_j: int, gamma: complex, which: str) -> np.ndarray:
    rep = make_spin_rep(two_j)
    return rep.by_name(which) @ unnormalized_components(two_j, gamma)


