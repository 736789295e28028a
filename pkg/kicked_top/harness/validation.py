"""
Invariant suites behind ``ktop validate``.

Each suite returns a SuiteResult with the worst residual it saw and the
tolerance it was held to. Quick mode shrinks every suite to the smallest
representations.
"""
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np
import pandas as pd

from ..algebra import algebra_residual, make_spin_rep, unitarity_residual
from ..classical import SpherePoint, classical_step_stereo, stereo_cartesian_gap
from ..coherent import (MomentVector, PhasePoint, differential_action, identity_resolution_residual,
                        matrix_action, moments_at, unnormalized_components)
from ..config import ExperimentConfig, Tolerances
from ..propagator import (DEFAULT_KQ_VARIANT, ClassicalKickVariant, KickVariant,
                          classical_factorization_residual, exact_oracle_residual, rotate_moments,
                          rotation_matrix)
from ..quantum import HeisenbergOrdering, TopParams, floquet_operator, heisenberg_map_residual
from ..utils.logging_utils import get_logger
from .experiments import oracle_deviation, semiclassical_sweep

logger = get_logger(__name__)

SEMICLASSICAL_SLACK = 0.2


@dataclass
class SuiteResult:
    suite: str
    passed: bool
    max_residual: float
    tolerance: float
    detail: str = ''


@dataclass(frozen=True)
class SuiteSizes:
    """Representations and sample counts each suite runs over"""
    algebra: Tuple[int, ...]
    norm: Tuple[int, ...]
    actions: Tuple[int, ...]
    identity: Tuple[int, ...]
    heisenberg: Tuple[int, ...]
    heisenberg_ks: Tuple[float, ...]
    pointwise: Tuple[int, ...]
    exact: Tuple[int, ...]
    oracle: Tuple[int, ...]
    oracle_ks: Tuple[float, ...]
    factorization: Tuple[int, ...]
    semiclassical: Tuple[int, ...]
    samples: int
    chart_samples: int
    steps: int

    @classmethod
    def full(cls) -> 'SuiteSizes':
        return cls(algebra=tuple(range(1, 41)), norm=(1, 2, 5, 10, 20, 40), actions=tuple(range(1, 7)),
                   identity=tuple(range(1, 21)), heisenberg=tuple(range(1, 21)),
                   heisenberg_ks=(0.0, 1.0, 3.0, 6.0, 10.0), pointwise=tuple(range(1, 21)),
                   exact=tuple(range(1, 13)), oracle=(1, 2, 10, 20), oracle_ks=(0.0, 1.0, 3.0, 6.0),
                   factorization=(1, 2, 5, 10), semiclassical=(10, 20, 40, 80, 160),
                   samples=500, chart_samples=10000, steps=20)

    @classmethod
    def quick(cls) -> 'SuiteSizes':
        return cls(algebra=(1,), norm=(1,), actions=(1,), identity=(1,), heisenberg=(1,),
                   heisenberg_ks=(0.0, 3.0), pointwise=(1,), exact=(1,), oracle=(1,), oracle_ks=(0.0, 3.0),
                   factorization=(1,), semiclassical=(10, 20, 40), samples=50, chart_samples=200, steps=5)


def _result(suite: str, residual: float, tolerance: float, detail: str = '') -> SuiteResult:
    passed = bool(np.isfinite(residual) and residual <= tolerance)
    logger.info(f"Suite {suite}: residual {residual:.3e} (tolerance {tolerance:.1e}) "
                f"{'passed' if passed else 'FAILED'}")
    return SuiteResult(suite, passed, float(residual), tolerance, detail)


def _random_gammas(rng: np.random.Generator, n: int, radius: float) -> np.ndarray:
    return radius * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


def _random_sphere_points(rng: np.random.Generator, n: int) -> np.ndarray:
    vectors = rng.standard_normal((n, 3))
    return vectors / np.linalg.norm(vectors, axis=1, keepdims=True)


def algebra_suite(two_js: Iterable[int], tolerance: float) -> SuiteResult:
    """Commutators, Casimir and Floquet unitarity."""
    worst = 0.0
    for two_j in two_js:
        worst = max(worst, algebra_residual(make_spin_rep(two_j)))
        for k in (0.0, 3.0):
            worst = max(worst, unitarity_residual(floquet_operator(TopParams(two_j, k))))
    return _result('algebra', worst, tolerance)


def coherent_norm_suite(two_js: Iterable[int], n_samples: int, tolerance: float,
                        rng: np.random.Generator) -> SuiteResult:
    """||gamma>>|^2 against (1 + |gamma|^2)^2j, relative."""
    worst = 0.0
    for two_j in two_js:
        for gamma in _random_gammas(rng, n_samples, 3.0):
            expected = (1 + abs(gamma) ** 2) ** two_j
            norm = float(np.sum(np.abs(unnormalized_components(two_j, gamma)) ** 2))
            worst = max(worst, abs(norm - expected) / expected)
    return _result('coherent_norm', worst, tolerance)


def differential_action_suite(two_js: Iterable[int], n_samples: int, tolerance: float,
                              rng: np.random.Generator) -> SuiteResult:
    worst = 0.0
    for two_j in two_js:
        for gamma in _random_gammas(rng, n_samples, 1.0):
            for which in ('minus', 'plus', 'z'):
                gap = differential_action(two_j, gamma, which) - matrix_action(two_j, gamma, which)
                worst = max(worst, float(np.max(np.abs(gap))))
    return _result('differential_actions', worst, tolerance)


def identity_suite(two_js: Iterable[int], tolerance: float) -> SuiteResult:
    worst = max(identity_resolution_residual(two_j) for two_j in two_js)
    return _result('identity_resolution', worst, tolerance)


def heisenberg_suite(two_js: Iterable[int], ks: Iterable[float], tolerance: float) -> SuiteResult:
    ks = tuple(ks)
    worst = max(heisenberg_map_residual(TopParams(two_j, k), HeisenbergOrdering.ROTATED)
                for two_j in two_js for k in ks)
    return _result('heisenberg', worst, tolerance)


def rotation_pointwise_suite(two_js: Iterable[int], n_samples: int, tolerance: float,
                             rng: np.random.Generator) -> SuiteResult:
    """f_nm(M(gamma)) against sum_rs R[n, m, r, s] f_rs(gamma) on random points."""
    points = [SpherePoint(*v).to_phase_point() for v in _random_sphere_points(rng, n_samples)]
    worst = 0.0
    for two_j in two_js:
        rotation = rotation_matrix(two_j)
        for point in points:
            image = classical_step_stereo(point, 0.0)
            predicted = rotate_moments(rotation, MomentVector(rotation.j, moments_at(two_j, point))).values
            worst = max(worst, float(np.max(np.abs(moments_at(two_j, image) - predicted))))
    return _result('rotation_pointwise', worst, tolerance)


def rotation_exact_suite(two_js: Iterable[int], tolerance: float) -> SuiteResult:
    worst = max(exact_oracle_residual(two_j) for two_j in two_js)
    return _result('rotation_exact', worst, tolerance)


def select_kq_variant(two_j: int, k: float, point: PhasePoint, steps: int) -> Tuple[KickVariant, Dict[str, float]]:
    """
    Pick the K^Q variant whose moment trajectory tracks the density matrix.

    Ties (k = 0 makes both variants equal) go to the default variant.
    """
    deviations = {variant.value: oracle_deviation(two_j, k, point, steps, variant) for variant in KickVariant}
    ranked = sorted(KickVariant, key=lambda v: (deviations[v.value], v is not DEFAULT_KQ_VARIANT))
    return ranked[0], deviations


def kq_oracle_suite(two_js: Iterable[int], ks: Iterable[float], theta: float, phi: float, steps: int,
                    variant: KickVariant, tolerance: float) -> Tuple[SuiteResult, SuiteResult]:
    """
    Variant selection against direct evolution, then oracle equivalence for
    ``variant``.
    """
    point = PhasePoint.from_angles(theta, phi)
    ks = tuple(ks)
    worst = 0.0
    mismatches = []
    for two_j in two_js:
        for k in ks:
            selected, deviations = select_kq_variant(two_j, k, point, steps)
            if selected is not DEFAULT_KQ_VARIANT:
                mismatches.append(f"2j={two_j} k={k} selects {selected.value}")
            worst = max(worst, deviations[variant.value])
    # residual counts the grid points where the other variant tracks the density matrix better
    selection = _result('kq_selection', float(len(mismatches)), 0.0,
                        '; '.join(mismatches) or f"selected {DEFAULT_KQ_VARIANT.value}")
    return selection, _result('oracle_equivalence', worst, tolerance, f"kq_variant={variant.value}")


def chart_suite(n_samples: int, k: float, tolerance: float, rng: np.random.Generator) -> SuiteResult:
    """Stereographic map (with chart switching) against the Cartesian map."""
    worst = 0.0
    for vector in _random_sphere_points(rng, n_samples):
        worst = max(worst, stereo_cartesian_gap(SpherePoint(*vector).to_phase_point(), k))
    return _result('classical_charts', worst, tolerance)


def factorization_suite(two_js: Iterable[int], k: float, theta: float, phi: float, steps: int,
                        variant: ClassicalKickVariant, tolerance: float) -> SuiteResult:
    start = PhasePoint.from_angles(theta, phi)
    worst = max(classical_factorization_residual(rotation_matrix(two_j), k, start, steps, variant)
                for two_j in two_js)
    return _result('factorization', worst, tolerance, f"kc_variant={variant.value}")


def semiclassical_suite(two_js: Sequence[int], theta: float, phi: float, ks: Iterable[float] = (1.0, 3.0),
                        slack: float = SEMICLASSICAL_SLACK) -> SuiteResult:
    """
    One-step gap |<J_x>/j - X''| from matched starting points must shrink
    with j, each step allowed to grow by at most ``slack``.
    """
    worst = 0.0
    details = []
    for k in ks:
        differences = semiclassical_sweep(two_js, k, theta, phi)['difference'].to_numpy()
        ratios = differences[1:] / differences[:-1]
        worst = max(worst, float(ratios.max()) if len(ratios) else 0.0)
        details.append(f"k={k}: " + ', '.join(f"{d:.3e}" for d in differences))
    return _result('semiclassical', worst, 1.0 + slack, '; '.join(details))


def run_validation(config: ExperimentConfig, quick: bool = False) -> List[SuiteResult]:
    """Run every suite with ``config``'s k, variants, start point and tolerances."""
    sizes = SuiteSizes.quick() if quick else SuiteSizes.full()
    tol: Tolerances = config.tolerances
    rng = np.random.default_rng(config.seed)
    selection, oracle = kq_oracle_suite(sizes.oracle, sizes.oracle_ks, config.theta, config.phi, sizes.steps,
                                        config.kq_variant, tol.oracle)
    results = [
        algebra_suite(sizes.algebra, tol.algebra),
        coherent_norm_suite(sizes.norm, sizes.samples, tol.coherent, rng),
        differential_action_suite(sizes.actions, sizes.samples, tol.actions, rng),
        identity_suite(sizes.identity, tol.identity),
        heisenberg_suite(sizes.heisenberg, sizes.heisenberg_ks, tol.heisenberg),
        rotation_pointwise_suite(sizes.pointwise, sizes.samples, tol.rotation, rng),
        rotation_exact_suite(sizes.exact, tol.exact),
        selection,
        oracle,
        chart_suite(sizes.chart_samples, config.k, tol.charts, rng),
        factorization_suite(sizes.factorization, config.k, config.theta, config.phi, 5 * sizes.steps,
                            config.kc_variant, tol.factorization),
        semiclassical_suite(sizes.semiclassical, config.theta, config.phi),
    ]
    return results


def report_table(results: List[SuiteResult]) -> pd.DataFrame:
    table = pd.DataFrame([asdict(result) for result in results])
    table['passed'] = table['passed'].map({True: 'PASS', False: 'FAIL'})
    return table


def report_document(results: List[SuiteResult], config: ExperimentConfig, quick: bool) -> dict:
    return {
        'passed': all(result.passed for result in results),
        'quick': quick,
        'config': config.to_dict(),
        'suites': [asdict(result) for result in results],
    }
