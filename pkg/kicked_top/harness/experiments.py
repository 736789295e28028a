"""
Experiment runs: one trajectory table per grid point.

Every mode yields the same ComparisonRecord columns; columns a mode does not
compute are left empty (NaN).
"""
from typing import Dict, Iterable, List

import numpy as np
import pandas as pd

from ..algebra import SpinJ, make_spin_rep
from ..classical import SpherePoint, classical_step, evolve_ensemble, sample_coherent_ensemble
from ..coherent import PhasePoint, expectations_from_moments, moments_from_density
from ..config import ExperimentConfig, Mode
from ..propagator import KickVariant, kick_spectrum, quantum_step, rotation_matrix
from ..quantum import QuantumState, TopParams, expectation, floquet_operator, step_state
from ..utils.logging_utils import get_logger

logger = get_logger(__name__)

COLUMNS = ['step',
           'jx_q', 'jy_q', 'jz_q',
           'jx_m', 'jy_m', 'jz_m',
           'x_c', 'y_c', 'z_c',
           'max_abs_moment_residual']

SWEEP_COLUMNS = ['two_j', 'jx_q', 'jy_q', 'jz_q', 'x_c', 'y_c', 'z_c', 'difference', 'distance']


def matrix_trajectory(params: TopParams, point: PhasePoint, steps: int) -> np.ndarray:
    """(steps+1, 3) array of <J_x, J_y, J_z>/j under direct density-matrix evolution."""
    rep = make_spin_rep(params.j)
    u = floquet_operator(params)
    state = QuantumState.coherent(params.j, point)
    rows = []
    for step in range(steps + 1):
        if step:
            state = step_state(state, u)
        rows.append([expectation(state, rep.by_name(a)).real for a in 'xyz'])
    return np.array(rows) / params.j.j


def moment_trajectory(j: SpinJ, k: float, point: PhasePoint, steps: int,
                      variant: KickVariant = KickVariant.EIGENVALUE,
                      densities: List[np.ndarray] = None):
    """
    Propagate the moments of a coherent state with R and K^Q.

    Returns the (steps+1, 3) array of expectations divided by j and, when
    ``densities`` are given, the max-abs gap to their moments at each step.
    """
    rotation = rotation_matrix(j)
    spectrum = kick_spectrum(j, k, variant)
    moments = moments_from_density(QuantumState.coherent(j, point).to_density())
    rows, residuals = [], []
    for step in range(steps + 1):
        if step:
            moments = quantum_step(rotation, spectrum, moments)
        averages = expectations_from_moments(moments)
        rows.append([averages.jx, averages.jy, averages.jz])
        if densities is not None:
            residuals.append(float(np.max(np.abs(moments.values - moments_from_density(densities[step]).values))))
    return np.array(rows) / j.j, np.array(residuals) if densities is not None else None


def point_trajectory(point: SpherePoint, k: float, steps: int) -> np.ndarray:
    rows = [point.as_array()]
    for _ in range(steps):
        point = classical_step(point, k)
        rows.append(point.as_array())
    return np.array(rows)


def oracle_deviation(two_j: int, k: float, point: PhasePoint, steps: int,
                     variant: KickVariant = KickVariant.EIGENVALUE) -> float:
    """Worst gap between moment-propagated and matrix-evolved expectations, divided by j."""
    params = TopParams(two_j, k)
    matrix = matrix_trajectory(params, point, steps)
    moments, _ = moment_trajectory(params.j, k, point, steps, variant)
    return float(np.max(np.abs(matrix - moments)))


def _densities(params: TopParams, point: PhasePoint, steps: int) -> List[np.ndarray]:
    u = floquet_operator(params)
    state = QuantumState.coherent(params.j, point)
    densities = [state.to_density()]
    for _ in range(steps):
        state = step_state(state, u)
        densities.append(state.to_density())
    return densities


def run_experiment(config: ExperimentConfig) -> pd.DataFrame:
    """Run one grid point and return its ComparisonRecord table, step 0 included."""
    steps = config.steps
    table = pd.DataFrame(np.nan, index=range(steps + 1), columns=COLUMNS)
    table['step'] = np.arange(steps + 1)
    start = PhasePoint.from_angles(config.theta, config.phi)

    if config.mode in (Mode.QUANTUM_MATRIX, Mode.COMPARE):
        params = TopParams(config.two_j, config.k, config.p)
        table[['jx_q', 'jy_q', 'jz_q']] = matrix_trajectory(params, start, steps)

    if config.mode in (Mode.QUANTUM_MOMENTS, Mode.COMPARE):
        spin = SpinJ(config.two_j)
        densities = None
        if config.mode is Mode.COMPARE:
            densities = _densities(TopParams(spin, config.k), start, steps)
        values, residuals = moment_trajectory(spin, config.k, start, steps, config.kq_variant, densities)
        table[['jx_m', 'jy_m', 'jz_m']] = values
        if residuals is not None:
            table['max_abs_moment_residual'] = residuals
            worst = float(residuals.max())
            if worst > config.tolerances.oracle:
                logger.warning(f"Moment propagation drifts from the density matrix by {worst:.3e} "
                               f"(2j={config.two_j}, k={config.k}, kq_variant={config.kq_variant.value})")

    if config.mode in (Mode.CLASSICAL_POINT, Mode.COMPARE):
        table[['x_c', 'y_c', 'z_c']] = point_trajectory(SpherePoint.from_angles(config.theta, config.phi),
                                                        config.k, steps)

    if config.mode is Mode.CLASSICAL_ENSEMBLE:
        ensemble = sample_coherent_ensemble(SpherePoint.from_angles(config.theta, config.phi),
                                            config.two_j, config.ensemble_size, config.seed)
        _, series = evolve_ensemble(ensemble, config.k, steps)
        table[['x_c', 'y_c', 'z_c']] = series.means

    table['step'] = table['step'].astype(int)
    logger.info(f"Finished {config.mode.value} run: 2j={config.two_j}, k={config.k}, {steps} steps")
    return table


def semiclassical_sweep(two_js: Iterable[int], k: float, theta: float, phi: float) -> pd.DataFrame:
    """
    One-step gap between <J>/j from a coherent state and the classical image
    of the same starting point, for each two_j.

    ``difference`` is |<J_x>/j - X''|; ``distance`` is the max-abs gap over
    all three components.
    """
    start = PhasePoint.from_angles(theta, phi)
    classical = classical_step(SpherePoint.from_angles(theta, phi), k).as_array()
    rows: List[Dict[str, float]] = []
    for two_j in two_js:
        quantum = matrix_trajectory(TopParams(two_j, k), start, 1)[1]
        rows.append({
            'two_j': two_j,
            'jx_q': quantum[0], 'jy_q': quantum[1], 'jz_q': quantum[2],
            'x_c': classical[0], 'y_c': classical[1], 'z_c': classical[2],
            'difference': abs(quantum[0] - classical[0]),
            'distance': float(np.max(np.abs(quantum - classical))),
        })
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
