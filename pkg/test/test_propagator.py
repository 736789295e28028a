"""Rotation matrix R, kick multipliers and the moment propagator."""

import json
import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis.strategies import floats, integers

from kicked_top.classical import classical_step_stereo
from kicked_top.coherent import (MomentVector, Observable, PhasePoint, expectations_from_moments,
                                 moments_at, moments_from_delta, moments_from_density, observable_coefficients)
from kicked_top.exceptions import ExportError, FactorizationError, InputError
from kicked_top.harness import oracle_deviation, select_kq_variant
from kicked_top.propagator import (ClassicalKickVariant, KickVariant, classical_factorization_residual,
                                   classical_kick_multiplier, classical_step_moments, exact_oracle_residual,
                                   exact_rotation_entries, export_rotation_matrix, import_rotation_matrix,
                                   kick_generator_action, kick_spectrum, quantum_step, rotate_moments,
                                   rotation_matrix)
from kicked_top.quantum import QuantumState, TopParams, floquet_operator, step_state

half = sympy.Rational(1, 2)


class TestRotationMatrix:

    def test_spin_half_worked_values(self):
        entries = rotation_matrix(1).entries.real
        np.testing.assert_allclose(entries[0, 0].T.ravel(), [0.5, -0.5, -0.5, 0.5])
        np.testing.assert_allclose(entries[1, 0].T.ravel(), [0.5, 0.5, -0.5, -0.5])

    def test_spin_half_exact_entries(self):
        exact = exact_rotation_entries(1)
        assert set(exact.ravel()) == {half, -half}

    @pytest.mark.parametrize('two_j', range(1, 13))
    def test_exact_oracle(self, two_j):
        assert exact_oracle_residual(two_j) < 1e-13

    def test_exact_expansion_is_capped(self):
        with pytest.raises(ExportError):
            exact_rotation_entries(13)

    @settings(max_examples=100, deadline=None)
    @given(integers(1, 20), floats(0.0, math.pi), floats(0.0, 2 * math.pi))
    def test_pointwise_moebius_identity(self, two_j, theta, phi):
        point = PhasePoint.from_angles(theta, phi)
        rotation = rotation_matrix(two_j)
        image = classical_step_stereo(point, 0.0)
        predicted = rotate_moments(rotation, MomentVector(rotation.j, moments_at(two_j, point))).values
        np.testing.assert_allclose(moments_at(two_j, image), predicted, atol=1e-10)

    def test_north_pole_rotates_to_gamma_one(self):
        moments = rotate_moments(rotation_matrix(4), moments_from_delta(4, PhasePoint(0j)))
        np.testing.assert_allclose(moments.values, np.full((5, 5), 2.0 ** -4), atol=1e-15)

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            rotate_moments(rotation_matrix(2), moments_from_delta(3, PhasePoint(0j)))

    @pytest.mark.parametrize('two_j', [1, 4, 7])
    def test_entries_are_real_and_swap_symmetric(self, two_j):
        entries = rotation_matrix(two_j).entries
        assert np.all(entries.imag == 0)
        np.testing.assert_array_equal(entries, entries.transpose(1, 0, 3, 2))

    def test_rotation_keeps_moments_hermitian(self, generic_point):
        rho = 0.6 * QuantumState.coherent(6, generic_point).data
        rho = rho + 0.4 * QuantumState.coherent(6, PhasePoint(0.3 - 0.8j)).data
        moments = moments_from_density(rho)
        rotation = rotation_matrix(6)
        for _ in range(5):
            moments = rotate_moments(rotation, moments)
            assert moments.hermiticity_residual() < 1e-13


class TestExport:

    def test_spin_half_document(self, tmp_path):
        path = export_rotation_matrix(1, tmp_path / 'r.json')
        document = json.loads(path.read_text())
        assert document['two_j'] == 1
        assert np.array(document['entries']).size == 16
        assert {tuple(pair) for pair in np.array(document['exact']).reshape(-1, 2).tolist()} == {(1, 2), (-1, 2)}

    def test_exact_round_trip(self, tmp_path):
        path = export_rotation_matrix(5, tmp_path / 'r.json')
        assert (import_rotation_matrix(path, exact=True) == exact_rotation_entries(5)).all()

    def test_reloaded_matrix_still_rotates(self, tmp_path):
        path = export_rotation_matrix(12, tmp_path / 'r12.json')
        rotation = import_rotation_matrix(path)
        point = PhasePoint.from_angles(1.2, 2.2)
        predicted = rotate_moments(rotation, MomentVector(rotation.j, moments_at(12, point))).values
        np.testing.assert_allclose(moments_at(12, classical_step_stereo(point, 0.0)), predicted, atol=1e-10)

    def test_large_export_has_no_exact_block(self, tmp_path):
        path = export_rotation_matrix(13, tmp_path / 'r13.json')
        assert 'exact' not in json.loads(path.read_text())
        with pytest.raises(ExportError):
            import_rotation_matrix(path, exact=True)

    def test_cap(self, tmp_path):
        with pytest.raises(ExportError, match=r'\(2j\+1\)\^4'):
            export_rotation_matrix(41, tmp_path / 'r.json')
        assert not (tmp_path / 'r.json').exists()

    def test_rejects_foreign_json(self, tmp_path):
        path = tmp_path / 'other.json'
        path.write_text('{"format": "something else"}')
        with pytest.raises(ExportError):
            import_rotation_matrix(path)


class TestQuantumKick:

    def test_diagonal_is_one(self):
        for variant in KickVariant:
            np.testing.assert_allclose(np.diag(kick_spectrum(6, 2.5, variant).multiplier), 1.0)

    def test_variants_are_conjugate(self):
        eigen = kick_spectrum(6, 2.5, KickVariant.EIGENVALUE).multiplier
        tensor = kick_spectrum(6, 2.5, KickVariant.TENSOR).multiplier
        np.testing.assert_allclose(tensor, eigen.conj(), atol=1e-14)

    def test_needs_two_j(self):
        with pytest.raises(InputError):
            kick_spectrum(0, 1.0)

    def test_zero_kick_is_pure_rotation(self, generic_point):
        rotation = rotation_matrix(5)
        moments = moments_from_delta(5, generic_point)
        np.testing.assert_allclose(quantum_step(rotation, kick_spectrum(5, 0.0), moments).values,
                                   rotate_moments(rotation, moments).values)

    def test_one_step_from_north_pole(self):
        two_j, k = 8, 3.0
        rho = step_state(QuantumState.coherent(two_j, PhasePoint(0j)), floquet_operator(TopParams(two_j, k))).data
        moments = quantum_step(rotation_matrix(two_j), kick_spectrum(two_j, k), moments_from_delta(two_j, PhasePoint(0j)))
        jz = sum(c * moments.values[n, m] for (n, m), c in observable_coefficients(two_j, Observable.JZ).items())
        jz_matrix = np.trace(rho @ np.diag(two_j / 2 - np.arange(two_j + 1)))
        assert abs(jz - jz_matrix) < 1e-9

    def test_density_oracle_selects_eigenvalue_form(self, generic_point):
        selected, deviations = select_kq_variant(10, 3.0, generic_point, 20)
        assert selected is KickVariant.EIGENVALUE
        assert deviations['eigen'] < 1e-7
        assert deviations['tensor'] > 1e-3

    def test_tie_goes_to_default(self, generic_point):
        selected, deviations = select_kq_variant(4, 0.0, generic_point, 5)
        assert deviations['eigen'] == deviations['tensor']
        assert selected is KickVariant.EIGENVALUE

    @pytest.mark.parametrize('two_j', [1, 2, 10, 20])
    @pytest.mark.parametrize('k', [0.0, 1.0, 3.0, 6.0])
    def test_oracle_equivalence(self, two_j, k, generic_point):
        assert oracle_deviation(two_j, k, generic_point, 20) < 1e-7

    def test_moments_track_density_matrix(self, generic_point):
        two_j, k = 6, 6.0
        u = floquet_operator(TopParams(two_j, k))
        state = QuantumState.coherent(two_j, generic_point)
        rotation, spectrum = rotation_matrix(two_j), kick_spectrum(two_j, k)
        moments = moments_from_density(state.data)
        for _ in range(10):
            state = step_state(state, u)
            moments = quantum_step(rotation, spectrum, moments)
        np.testing.assert_allclose(moments.values, moments_from_density(state.data).values, atol=1e-9)
        assert expectations_from_moments(moments).jz == pytest.approx(
            np.trace(state.data @ np.diag(3 - np.arange(7))).real, abs=1e-9)


class TestClassicalKick:

    def test_diagonal_is_one(self, generic_point):
        np.testing.assert_allclose(np.diag(classical_kick_multiplier(6, 3.0, generic_point)), 1.0)

    def test_no_kick_on_the_yz_circle(self):
        point = PhasePoint(0.4j)
        np.testing.assert_allclose(classical_kick_multiplier(6, 3.0, point), 1.0)

    def test_zero_kick_is_moebius_image(self, generic_point):
        result = classical_step_moments(rotation_matrix(4), 4, 0.0, generic_point)
        gamma = generic_point.gamma
        image = PhasePoint.from_gamma((1 + gamma) / (1 - gamma))
        np.testing.assert_allclose(result.moments, moments_at(4, image), atol=1e-12)

    @pytest.mark.parametrize('two_j', [1, 2, 5, 10])
    def test_factorization_along_trajectory(self, two_j, generic_point):
        assert classical_factorization_residual(rotation_matrix(two_j), 3.0, generic_point, 100) < 1e-10

    def test_paper_variant_fails(self, generic_point):
        residual = classical_factorization_residual(rotation_matrix(4), 3.0, generic_point, 100,
                                                    ClassicalKickVariant.PAPER)
        assert residual > 1e-3
        with pytest.raises(FactorizationError):
            classical_step_moments(rotation_matrix(4), 4, 3.0, generic_point, ClassicalKickVariant.PAPER)

    def test_pole_of_moebius_map_switches_chart(self):
        result = classical_step_moments(rotation_matrix(4), 4, 2.0, PhasePoint(1 + 0j))
        assert result.point.is_south_pole
        assert result.residual < 1e-12


class TestKickGenerator:

    @pytest.mark.parametrize('n, m', [(0, 2), (3, 1), (4, 0), (2, 2)])
    def test_moments_are_eigenfunctions(self, n, m):
        two_j, gamma = 4, 0.3 + 0.2j
        j = two_j / 2
        value = gamma ** n * gamma.conjugate() ** m / (1 + abs(gamma) ** 2) ** two_j
        eigenvalue = ((j - n) ** 2 - (j - m) ** 2) / two_j
        assert abs(kick_generator_action(two_j, n, m, gamma) - eigenvalue * value) < 1e-6
