"""
Classical kicked top on the unit sphere, (X, Y, Z) = (J_x, J_y, J_z) / j.

One period is the quarter turn (X, Y, Z) -> (Z, Y, -X) followed by a rotation
about z through the angle -k X of the pre-turn point:

    X'' = Z cos(kX) + Y sin(kX)
    Y'' = -Z sin(kX) + Y cos(kX)
    Z'' = -X
"""
import math
from dataclasses import dataclass

import numpy as np

from ..coherent import Chart, PhasePoint


@dataclass(frozen=True)
class SpherePoint:
    x: float
    y: float
    z: float

    @classmethod
    def normalized(cls, x: float, y: float, z: float) -> 'SpherePoint':
        norm = math.sqrt(x * x + y * y + z * z)
        return cls(x / norm, y / norm, z / norm)

    @classmethod
    def from_phase_point(cls, point: PhasePoint) -> 'SpherePoint':
        return cls.normalized(*point.cartesian())

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> 'SpherePoint':
        return cls(math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta))

    def to_phase_point(self) -> PhasePoint:
        return PhasePoint.from_cartesian(self.x, self.y, self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def norm_error(self) -> float:
        return abs(self.x * self.x + self.y * self.y + self.z * self.z - 1)


def classical_step_array(points: np.ndarray, k: float) -> np.ndarray:
    """Apply one period to an (..., 3) array of unit vectors, renormalizing."""
    points = np.asarray(points, dtype=float)
    x, y, z = points[..., 0], points[..., 1], points[..., 2]
    angle = k * x
    cos, sin = np.cos(angle), np.sin(angle)
    out = np.stack([z * cos + y * sin, -z * sin + y * cos, -x], axis=-1)
    return out / np.linalg.norm(out, axis=-1, keepdims=True)


def classical_step(point: SpherePoint, k: float) -> SpherePoint:
    x, y, z = classical_step_array(point.as_array(), k)
    return SpherePoint(float(x), float(y), float(z))


def classical_step_stereo(point: PhasePoint, k: float) -> PhasePoint:
    """
    gamma'' = (1 + gamma) / (1 - gamma) exp(-i k (gamma + gamma*) / (1 + |gamma|^2)).

    The image lands on whichever chart keeps its coordinate inside the unit
    disc, so the pole of the Moebius factor at gamma = 1 never divides by zero.
    """
    x, _, _ = point.cartesian()
    phase = complex(math.cos(k * x), -math.sin(k * x))
    w = point.gamma
    if point.chart is Chart.NORTH:
        # North image (1+g)/(1-g), South image conj((1-g)/(1+g))
        top, bottom = 1 + w, 1 - w
        if abs(top) <= abs(bottom):
            return PhasePoint(phase * top / bottom, Chart.NORTH)
        return PhasePoint(phase * (bottom / top).conjugate(), Chart.SOUTH)
    # South coordinate eta = 1/conj(g): North image (conj(eta)+1)/(conj(eta)-1)
    top, bottom = w.conjugate() + 1, w.conjugate() - 1
    if abs(top) <= abs(bottom):
        return PhasePoint(phase * top / bottom, Chart.NORTH)
    return PhasePoint(phase * (bottom / top).conjugate(), Chart.SOUTH)


def stereo_cartesian_gap(point: PhasePoint, k: float) -> float:
    """Distance between the stereographic and Cartesian images of one point."""
    stereo = np.array(classical_step_stereo(point, k).cartesian())
    cartesian = classical_step(SpherePoint.from_phase_point(point), k).as_array()
    return float(np.max(np.abs(stereo - cartesian)))
