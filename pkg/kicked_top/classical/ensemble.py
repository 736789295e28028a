from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..coherent import moment_functions
from ..exceptions import InputError
from ..utils.logging_utils import get_logger
from .sphere_map import SpherePoint, classical_step_array

logger = get_logger(__name__)

CHUNK_SIZE = 4096


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Weighted points on the unit sphere; ``points`` has shape (N, 3)."""
    points: np.ndarray
    weights: np.ndarray
    rng_seed: int = 0

    def __post_init__(self):
        points = np.atleast_2d(np.asarray(self.points, dtype=float))
        weights = np.asarray(self.weights, dtype=float)
        if points.ndim != 2 or points.shape[1] != 3:
            raise InputError(f"Ensemble points must have shape (N, 3), got {points.shape}")
        if weights.shape != (points.shape[0],):
            raise InputError("Ensemble needs one weight per point")
        if np.any(weights < 0) or abs(weights.sum() - 1) > 1e-12:
            raise InputError("Ensemble weights must be non-negative and sum to 1")
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'weights', weights)

    @classmethod
    def single(cls, point: SpherePoint) -> 'Ensemble':
        return cls(point.as_array()[None, :], np.ones(1))

    @classmethod
    def uniform(cls, n_samples: int, seed: int) -> 'Ensemble':
        """Points spread uniformly over the sphere."""
        if n_samples < 1:
            raise InputError("Ensemble needs at least one sample")
        cos_theta, azimuth = _chunked_uniforms(n_samples, seed)
        local = _unit_vectors(2 * cos_theta - 1, 2 * np.pi * azimuth)
        return cls(local, np.full(n_samples, 1 / n_samples), seed)

    def __len__(self) -> int:
        return self.points.shape[0]

    def mean(self) -> np.ndarray:
        return self.weights @ self.points

    def mean_moments(self, two_j: int) -> np.ndarray:
        """Weighted average of f_nm over the points, in chunks to bound memory."""
        total = np.zeros((two_j + 1, two_j + 1), dtype=complex)
        for start in range(0, len(self), CHUNK_SIZE):
            block = self.points[start:start + CHUNK_SIZE]
            values = moment_functions(two_j, block[:, 0], block[:, 1], block[:, 2])
            total += np.tensordot(self.weights[start:start + CHUNK_SIZE], values, axes=1)
        return total


class EnsembleSeries(NamedTuple):
    """Per-step ensemble averages, step 0 included."""
    means: np.ndarray
    moments: np.ndarray


def _chunked_uniforms(n_samples: int, seed: int):
    # one child stream per fixed-size chunk, independent of how work is scheduled
    n_chunks = -(-n_samples // CHUNK_SIZE)
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    draws = []
    for index, child in enumerate(children):
        size = min(CHUNK_SIZE, n_samples - index * CHUNK_SIZE)
        draws.append(np.random.default_rng(child).random((size, 2)))
    uniforms = np.concatenate(draws)
    return uniforms[:, 0], uniforms[:, 1]


def _unit_vectors(cos_theta: np.ndarray, azimuth: np.ndarray) -> np.ndarray:
    sin_theta = np.sqrt(np.clip(1 - cos_theta ** 2, 0.0, None))
    return np.stack([sin_theta * np.cos(azimuth), sin_theta * np.sin(azimuth), cos_theta], axis=-1)


def _frame(target: SpherePoint) -> np.ndarray:
    """Rotation taking the z axis onto ``target``: R_z(phi) R_y(theta)."""
    theta = np.arccos(np.clip(target.z, -1.0, 1.0))
    phi = np.arctan2(target.y, target.x)
    ct, st, cp, sp = np.cos(theta), np.sin(theta), np.cos(phi), np.sin(phi)
    return np.array([[cp * ct, -sp, cp * st],
                     [sp * ct, cp, sp * st],
                     [-st, 0.0, ct]])


def sample_coherent_ensemble(point: SpherePoint, two_j: int, n_samples: int, seed: int) -> Ensemble:
    """
    Classical stand-in for a spin-j coherent state centred on ``point``.

    The angle Theta from the centre has density proportional to cos^(4j)(Theta/2)
    per unit solid angle, so w = cos^2(Theta/2) has density ~ w^(2j) on [0, 1] and
    is drawn as U^(1/(2j+1)). The mean axis component is j/(j+1).
    """
    if n_samples < 1:
        raise InputError("Ensemble needs at least one sample")
    if two_j < 0:
        raise InputError("two_j must be non-negative")
    radial, azimuth = _chunked_uniforms(n_samples, seed)
    w = np.power(radial, 1.0 / (two_j + 1))
    local = _unit_vectors(2 * w - 1, 2 * np.pi * azimuth)
    points = local @ _frame(point).T
    return Ensemble(points, np.full(n_samples, 1 / n_samples), seed)


def evolve_ensemble(ensemble: Ensemble, k: float, steps: int, moment_two_j: int = 2):
    """
    Advance every point ``steps`` periods, recording averages after each step.

    Returns:
        (final Ensemble, EnsembleSeries) where ``means`` has shape (steps+1, 3)
        and ``moments`` (steps+1, 2j+1, 2j+1) at resolution ``moment_two_j``.
    """
    if steps < 0:
        raise InputError("steps must be non-negative")
    points = ensemble.points
    means = [ensemble.weights @ points]
    moments = [ensemble.mean_moments(moment_two_j)]
    current = ensemble
    for step in range(steps):
        points = classical_step_array(points, k)
        current = Ensemble(points, ensemble.weights, ensemble.rng_seed)
        means.append(current.mean())
        moments.append(current.mean_moments(moment_two_j))
    logger.debug(f"Evolved {len(ensemble)} points for {steps} steps at k={k}")
    return current, EnsembleSeries(np.array(means), np.array(moments))
