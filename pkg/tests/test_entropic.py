import numpy as np
import pytest
from numpy.testing import assert_allclose

import qdiscord as qd
from qdiscord.linalg import ID2


class TestMeasurementA:
    def test_from_direction_is_complete(self):
        m = qd.MeasurementA.from_direction([0.3, -0.4, 0.5])
        assert_allclose(m.projectors.sum(axis=0), ID2, atol=1e-14)
        for p in m.projectors:
            assert np.linalg.norm(p @ p - p) <= 1e-12
            assert np.trace(p).real == pytest.approx(1.0)

    def test_z_direction(self):
        m = qd.MeasurementA.from_direction([0, 0, 1.0])
        assert_allclose(m.projectors[0], np.diag([1.0, 0.0]), atol=1e-15)

    def test_rejects_incomplete(self):
        p0 = np.diag([1.0, 0.0]).astype(complex)
        with pytest.raises(qd.ValidationError):
            qd.MeasurementA(np.stack([p0, p0]))

    def test_rejects_rank_two(self):
        with pytest.raises(qd.ValidationError):
            qd.MeasurementA(np.stack([np.eye(2, dtype=complex), np.zeros((2, 2), complex)]))


class TestConditionalEnsemble:
    def test_product_state_conditionals_equal_marginal(self, product_mixed):
        rho_b = qd.partial_trace(product_mixed, "B")
        for direction in ([0, 0, 1.0], [1.0, 0, 0], [0.6, 0.0, 0.8]):
            ens = qd.conditional_ensemble(product_mixed, qd.MeasurementA.from_direction(direction))
            for state in ens.states:
                assert_allclose(state, rho_b, atol=1e-12)

    def test_bell_z_measurement(self, bell):
        ens = qd.conditional_ensemble(bell, qd.MeasurementA.from_direction([0, 0, 1.0]))
        assert_allclose(ens.probs, [0.5, 0.5], atol=1e-14)
        assert_allclose(ens.states[0], np.diag([1.0, 0.0]), atol=1e-14)
        assert_allclose(ens.states[1], np.diag([0.0, 1.0]), atol=1e-14)

    def test_bell_x_measurement_pure_conditionals(self, bell):
        ens = qd.conditional_ensemble(bell, qd.MeasurementA.from_direction([1.0, 0, 0]))
        assert_allclose(ens.probs, [0.5, 0.5], atol=1e-14)
        for state in ens.states:
            purity = np.trace(state @ state).real
            assert purity == pytest.approx(1.0, abs=1e-12)

    def test_mixture_recovers_marginal(self):
        rho = qd.random_density_matrix(2, 3, 5)
        ens = qd.conditional_ensemble(rho, qd.MeasurementA.from_direction([0.1, 0.7, -0.7]))
        assert ens.probs.sum() == pytest.approx(1.0, abs=1e-10)
        mix = sum(p * s for p, s in zip(ens.probs, ens.states))
        assert_allclose(mix, qd.partial_trace(rho, "B"), atol=1e-10)

    def test_zero_probability_outcomes_omitted(self):
        ket = np.zeros(4, dtype=complex)
        ket[0] = 1.0  # |00>, A is pure |0>
        rho = qd.DensityMatrix(np.outer(ket, ket), 2, 2)
        ens = qd.conditional_ensemble(rho, qd.MeasurementA.from_direction([0, 0, 1.0]))
        assert len(ens.probs) == 1
        assert ens.probs[0] == pytest.approx(1.0)

    def test_qutrit_measurement_from_kets(self):
        # the ensemble API covers any measured dimension, only the optimizer
        # is qubit-specific
        rho = qd.random_density_matrix(3, 2, 7)
        u = qd.random_unitary(3, 2)
        m = qd.MeasurementA.from_kets([u[:, k] for k in range(3)])
        ens = qd.conditional_ensemble(rho, m)
        assert ens.probs.sum() == pytest.approx(1.0, abs=1e-10)
        mix = sum(p * s for p, s in zip(ens.probs, ens.states))
        assert_allclose(mix, qd.partial_trace(rho, "B"), atol=1e-10)

    def test_dim_mismatch(self):
        rho = qd.random_density_matrix(3, 2, 1)
        with pytest.raises(qd.DimensionError):
            qd.conditional_ensemble(rho, qd.MeasurementA.from_direction([0, 0, 1.0]))


class TestMutualInformation:
    def test_product_state(self, product_mixed):
        assert abs(qd.mutual_information(product_mixed)) <= 1e-10

    def test_bell_state(self, bell):
        assert qd.mutual_information(bell) == pytest.approx(2.0, abs=1e-10)

    def test_classical_bits(self, classical_bits):
        assert qd.mutual_information(classical_bits) == pytest.approx(1.0, abs=1e-10)

    def test_bounds_random(self):
        for seed in range(10):
            rho = qd.random_density_matrix(2, 3, seed)
            info = qd.mutual_information(rho)
            assert -1e-10 <= info <= 2 * min(1.0, np.log2(3)) + 1e-10


class TestClassicalCorrelation:
    def test_product_state(self, product_mixed):
        assert qd.classical_correlation_qa(product_mixed).value == pytest.approx(0.0, abs=1e-9)

    def test_bell_state(self, bell):
        assert qd.classical_correlation_qa(bell).value == pytest.approx(1.0, abs=1e-4)

    def test_classical_bits_optimum_along_z(self, classical_bits):
        res = qd.classical_correlation_qa(classical_bits)
        assert res.value == pytest.approx(1.0, abs=1e-4)
        assert abs(res.best_direction[2]) == pytest.approx(1.0, abs=1e-3)

    def test_rejects_large_a_side(self):
        with pytest.raises(qd.DimensionError):
            qd.classical_correlation_qa(qd.random_density_matrix(3, 2, 0))

    def test_grid_refinement_monotone(self):
        for seed in (1, 5):
            rho = qd.random_density_matrix(2, 2, seed)
            minima = [
                qd.classical_correlation_qa(rho, grid_points=n, refine_iters=80)
                .min_conditional_entropy
                for n in (256, 512, 1024, 2048)
            ]
            for coarse, fine in zip(minima, minima[1:]):
                assert fine <= coarse + 1e-9


class TestEntropicDiscord:
    def test_classical_quantum_states_vanish(self, classical_bits):
        assert qd.entropic_discord(classical_bits) <= 1e-6

    def test_bell_state(self, bell):
        assert qd.entropic_discord(bell) == pytest.approx(1.0, abs=1e-4)

    def test_eq4_state_positive_and_grid_checked(self, eq4_state):
        value = qd.entropic_discord(eq4_state)
        assert value > 1e-3
        # independent dense-grid cross-check of the measurement minimum
        coarse = qd.classical_correlation_qa(eq4_state)
        dense = qd.classical_correlation_qa(eq4_state, grid_points=200_000, refine_iters=0)
        assert coarse.min_conditional_entropy <= dense.min_conditional_entropy + 1e-9
        assert coarse.min_conditional_entropy == pytest.approx(
            dense.min_conditional_entropy, abs=1e-5
        )

    def test_asymmetry(self):
        # classical on A, quantum on B: D_A = 0 while D_B > 0
        plus = np.array([1, 1]) / np.sqrt(2)
        rho = qd.classical_quantum_state(
            [0.5, 0.5],
            [np.array([1, 0]), np.array([0, 1])],
            [np.diag([1.0, 0.0]), np.outer(plus, plus)],
        )
        d_a = qd.entropic_discord(rho)
        d_b = qd.entropic_discord(qd.swap_subsystems(rho))
        assert d_a <= 1e-6
        assert abs(d_a - d_b) > 1e-3

    def test_facet_states_symmetric(self):
        rho = qd.facet_state(1, -1, 1)
        d_a = qd.entropic_discord(rho)
        d_b = qd.entropic_discord(qd.swap_subsystems(rho))
        assert abs(d_a - d_b) <= 1e-6

    def test_agrees_with_commutator_criterion(self, classical_bits, eq4_state, bell):
        catalog = [
            (classical_bits, True),
            (qd.bell_diagonal_state([0.6, 0.0, 0.0]), True),
            (eq4_state, False),
            (bell, False),
            (qd.bell_diagonal_state([0.5, -0.4, 0.1]), False),
        ]
        for rho, classical in catalog:
            verdict = qd.zero_discord_test(rho, tol=1e-6)
            value = qd.entropic_discord(rho)
            assert verdict.is_zero_discord == classical
            assert (value <= 1e-6) == classical
