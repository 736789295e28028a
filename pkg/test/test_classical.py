"""Classical sphere map, chart-switching stereographic map and ensembles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats

from kicked_top.classical import (Ensemble, SpherePoint, classical_step, classical_step_array,
                                  classical_step_stereo, evolve_ensemble, sample_coherent_ensemble,
                                  stereo_cartesian_gap)
from kicked_top.coherent import Chart, PhasePoint
from kicked_top.exceptions import InputError
from kicked_top.harness import matrix_trajectory
from kicked_top.quantum import TopParams


def test_north_pole_goes_to_x_axis():
    for k in (0.0, 1.0, 7.0):
        image = classical_step(SpherePoint(0.0, 0.0, 1.0), k)
        np.testing.assert_allclose(image.as_array(), [1.0, 0.0, 0.0], atol=1e-15)


def test_pure_rotation_has_period_four():
    start = SpherePoint.from_angles(1.0, 0.5)
    point = start
    for _ in range(4):
        point = classical_step(point, 0.0)
    np.testing.assert_allclose(point.as_array(), start.as_array(), atol=1e-14)
    once = classical_step(start, 0.0)
    np.testing.assert_allclose(once.as_array(), [start.z, start.y, -start.x], atol=1e-15)


def test_step_keeps_unit_norm(rng):
    points = rng.standard_normal((1000, 3))
    points /= np.linalg.norm(points, axis=1, keepdims=True)
    for _ in range(50):
        points = classical_step_array(points, 6.0)
    np.testing.assert_allclose(np.linalg.norm(points, axis=1), 1.0, atol=1e-14)


def test_long_trajectory_stays_on_sphere():
    point = SpherePoint.from_angles(1.0, 0.5)
    for _ in range(10_000):
        point = classical_step(point, 6.0)
    assert point.norm_error() < 1e-12


def test_stereo_north_pole_lands_on_gamma_one():
    image = classical_step_stereo(PhasePoint(0j), 3.0)
    assert image.chart is Chart.NORTH
    assert image.gamma == pytest.approx(1.0)


def test_stereo_moebius_pole_lands_on_south_pole():
    image = classical_step_stereo(PhasePoint(1 + 0j), 2.0)
    assert image.is_south_pole
    np.testing.assert_allclose(image.cartesian(), [0.0, 0.0, -1.0], atol=1e-15)


def test_charts_agree_on_many_points(rng):
    vectors = rng.standard_normal((10000, 3))
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)
    worst = max(stereo_cartesian_gap(SpherePoint(*v).to_phase_point(), 3.0) for v in vectors)
    assert worst < 1e-9


@settings(deadline=None)
@given(floats(0.0, math.pi), floats(0.0, 2 * math.pi), floats(-10.0, 10.0))
def test_stereo_matches_cartesian(theta, phi, k):
    assert stereo_cartesian_gap(PhasePoint.from_angles(theta, phi), k) < 1e-9


@pytest.mark.parametrize('vector', [(0, 0, 1), (0, 0, -1), (1, 0, 0), (-1, 0, 0), (0, 1, 0)])
def test_special_points(vector):
    assert stereo_cartesian_gap(SpherePoint(*map(float, vector)).to_phase_point(), 2.5) < 1e-12


class TestEnsemble:

    def test_rejects_bad_shapes(self):
        with pytest.raises(InputError):
            Ensemble(np.zeros((4, 2)), np.full(4, 0.25))
        with pytest.raises(InputError):
            Ensemble(np.zeros((4, 3)), np.full(3, 1 / 3))

    def test_rejects_bad_weights(self):
        with pytest.raises(InputError):
            Ensemble(np.zeros((2, 3)), np.array([0.7, 0.7]))

    def test_single_point_follows_the_map(self):
        start = SpherePoint.from_angles(1.0, 0.5)
        final, series = evolve_ensemble(Ensemble.single(start), 3.0, 5)
        point = start
        for _ in range(5):
            point = classical_step(point, 3.0)
        np.testing.assert_allclose(final.mean(), point.as_array(), atol=1e-14)
        assert series.means.shape == (6, 3)
        assert series.moments.shape == (6, 3, 3)

    def test_uniform_mean_near_zero(self):
        ensemble = Ensemble.uniform(20000, seed=3)
        assert np.max(np.abs(ensemble.mean())) < 0.03

    def test_free_rotation_keeps_uniform_mean_near_zero(self):
        _, series = evolve_ensemble(Ensemble.uniform(20000, seed=5), 0.0, 8)
        assert series.means.shape == (9, 3)
        assert np.max(np.abs(series.means)) < 0.03

    def test_same_seed_same_points(self):
        target = SpherePoint.from_angles(0.7, 2.0)
        first = sample_coherent_ensemble(target, 10, 5000, seed=11)
        second = sample_coherent_ensemble(target, 10, 5000, seed=11)
        assert np.array_equal(first.points, second.points)
        other = sample_coherent_ensemble(target, 10, 5000, seed=12)
        assert not np.array_equal(first.points, other.points)

    def test_prefix_independent_of_size(self):
        target = SpherePoint(0.0, 0.0, 1.0)
        small = sample_coherent_ensemble(target, 4, 100, seed=5)
        large = sample_coherent_ensemble(target, 4, 200, seed=5)
        np.testing.assert_array_equal(small.points, large.points[:100])

    @pytest.mark.parametrize('two_j', [2, 10, 40])
    def test_mean_axis_component(self, two_j):
        ensemble = sample_coherent_ensemble(SpherePoint(0.0, 0.0, 1.0), two_j, 20000, seed=1)
        z = ensemble.points[:, 2]
        sigma = z.std() / math.sqrt(len(z))
        j = two_j / 2
        assert abs(z.mean() - j / (j + 1)) < 3 * sigma
        assert abs(z.mean() - 1.0) < 1 / (j + 1) + 3 * sigma

    def test_large_spin_concentrates_on_target(self):
        target = SpherePoint.from_angles(1.1, -0.4)
        ensemble = sample_coherent_ensemble(target, 20000, 10000, seed=2)
        assert np.max(np.abs(ensemble.mean() - target.as_array())) < 0.02

    def test_points_are_on_the_sphere(self):
        ensemble = sample_coherent_ensemble(SpherePoint.from_angles(2.0, 1.0), 6, 3000, seed=9)
        np.testing.assert_allclose(np.linalg.norm(ensemble.points, axis=1), 1.0, atol=1e-14)

    def test_ensemble_tracks_quantum_mean_at_large_spin(self):
        two_j, k = 160, 3.0
        target = PhasePoint.from_angles(1.0, 0.5)
        ensemble = sample_coherent_ensemble(SpherePoint.from_phase_point(target), two_j, 20000, seed=4)
        _, series = evolve_ensemble(ensemble, k, 1)
        quantum = matrix_trajectory(TopParams(two_j, k), target, 1)
        j = two_j / 2
        assert np.max(np.abs(series.means[1] - quantum[1])) < 2 * (1 + k ** 2) / j

    def test_moment_averages_of_single_point(self):
        start = SpherePoint(0.0, 0.0, 1.0)
        moments = Ensemble.single(start).mean_moments(4)
        expected = np.zeros((5, 5))
        expected[0, 0] = 1
        np.testing.assert_allclose(moments, expected)
