"""
Stereographic charts on the unit sphere.

The North chart uses gamma = (X + iY) / (1 + Z) and covers everything but the
south pole; the South chart uses eta = 1 / conj(gamma) = (X + iY) / (1 - Z) and
covers everything but the north pole. Points with |gamma| > 1 (Z < 0) are kept
on the South chart.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..exceptions import ChartError


class Chart(Enum):
    NORTH = 'north'
    SOUTH = 'south'


def _cartesian_from_coordinate(w: complex, chart: Chart) -> Tuple[float, float, float]:
    v = abs(w) ** 2
    x = 2 * w.real / (1 + v)
    y = 2 * w.imag / (1 + v)
    z = (1 - v) / (1 + v)
    return (x, y, z) if chart is Chart.NORTH else (x, y, -z)


@dataclass(frozen=True)
class PhasePoint:
    """A point on the classical sphere, held in one stereographic chart.

    ``gamma`` is the coordinate of ``chart``; ``theta`` and ``phi`` are cached
    polar angles of the same point.
    """
    gamma: complex
    chart: Chart = Chart.NORTH
    theta: float = None
    phi: float = None

    def __post_init__(self):
        object.__setattr__(self, 'gamma', complex(self.gamma))
        if not (math.isfinite(self.gamma.real) and math.isfinite(self.gamma.imag)):
            raise ChartError("Chart coordinate must be finite; chart conversion required")
        if self.theta is None or self.phi is None:
            r = abs(self.gamma)
            half = math.atan(r)
            theta = 2 * half if self.chart is Chart.NORTH else math.pi - 2 * half
            phi = math.atan2(self.gamma.imag, self.gamma.real) if r > 0 else 0.0
            object.__setattr__(self, 'theta', theta)
            object.__setattr__(self, 'phi', phi)

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> 'PhasePoint':
        """Point at polar angle theta and azimuth phi, on the better-conditioned chart."""
        half = theta / 2
        if math.cos(theta) >= 0:
            gamma = complex(math.cos(phi), math.sin(phi)) * math.tan(half)
            return cls(gamma, Chart.NORTH, theta, phi)
        eta = complex(math.cos(phi), math.sin(phi)) * math.tan((math.pi - theta) / 2)
        return cls(eta, Chart.SOUTH, theta, phi)

    @classmethod
    def from_cartesian(cls, x: float, y: float, z: float) -> 'PhasePoint':
        norm = math.sqrt(x * x + y * y + z * z)
        x, y, z = x / norm, y / norm, z / norm
        theta = math.acos(max(-1.0, min(1.0, z)))
        phi = math.atan2(y, x)
        if z >= 0:
            return cls(complex(x, y) / (1 + z), Chart.NORTH, theta, phi)
        return cls(complex(x, y) / (1 - z), Chart.SOUTH, theta, phi)

    @classmethod
    def from_gamma(cls, gamma: complex) -> 'PhasePoint':
        """Point with North-chart coordinate gamma, re-charted when |gamma| > 1."""
        return cls(gamma, Chart.NORTH).aligned()

    def cartesian(self) -> Tuple[float, float, float]:
        return _cartesian_from_coordinate(self.gamma, self.chart)

    @property
    def is_south_pole(self) -> bool:
        return self.chart is Chart.SOUTH and self.gamma == 0

    def north_gamma(self) -> complex:
        """gamma on the North chart."""
        if self.chart is Chart.NORTH:
            return self.gamma
        if self.gamma == 0:
            raise ChartError("South pole has no North-chart coordinate; chart conversion required")
        return 1 / self.gamma.conjugate()

    def south_eta(self) -> complex:
        if self.chart is Chart.SOUTH:
            return self.gamma
        if self.gamma == 0:
            raise ChartError("North pole has no South-chart coordinate; chart conversion required")
        return 1 / self.gamma.conjugate()

    def to_chart(self, chart: Chart) -> 'PhasePoint':
        if chart is self.chart:
            return self
        w = self.north_gamma() if chart is Chart.NORTH else self.south_eta()
        return PhasePoint(w, chart, self.theta, self.phi)

    def aligned(self) -> 'PhasePoint':
        """Same point on the chart where |coordinate| <= 1."""
        if abs(self.gamma) <= 1:
            return self
        other = Chart.SOUTH if self.chart is Chart.NORTH else Chart.NORTH
        return self.to_chart(other)
