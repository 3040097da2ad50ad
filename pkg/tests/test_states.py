import numpy as np
import pytest
from numpy.testing import assert_allclose

import qdiscord as qd
from qdiscord.linalg import ID2


def _pure(ket):
    ket = np.asarray(ket, dtype=complex)
    return np.outer(ket, ket.conj())


class TestBellDiagonal:
    def test_origin_is_maximally_mixed(self):
        assert_allclose(qd.bell_diagonal_state([0, 0, 0]).mat, np.eye(4) / 4)

    def test_vertex_is_bell_projector(self):
        phi_plus = _pure(np.array([1, 0, 0, 1]) / np.sqrt(2))
        assert_allclose(qd.bell_diagonal_state([1, -1, 1]).mat, phi_plus, atol=1e-15)

    def test_rejects_outside_tetrahedron(self):
        with pytest.raises(qd.OutsidePhysicalError):
            qd.bell_diagonal_state([2.0, 0.0, 0.0])

    def test_bloch_roundtrip(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            # rejection-sample the tetrahedron
            while True:
                t = rng.uniform(-1, 1, 3)
                if qd.tetrahedron_contains(t):
                    break
            b = qd.bloch_triple(qd.bell_diagonal_state(t))
            assert_allclose(np.diag(b.corr), t, atol=1e-12)
            assert_allclose(b.x, 0, atol=1e-12)
            assert_allclose(b.y, 0, atol=1e-12)


class TestBellStates:
    _KETS = {
        0: np.array([1, 0, 0, 1]) / np.sqrt(2),
        1: np.array([1, 0, 0, -1]) / np.sqrt(2),
        2: np.array([0, 1, 1, 0]) / np.sqrt(2),
        3: np.array([0, 1, -1, 0]) / np.sqrt(2),
    }

    @pytest.mark.parametrize("index", [0, 1, 2, 3])
    def test_matches_projector(self, index):
        assert_allclose(qd.bell_state(index).mat, _pure(self._KETS[index]), atol=1e-15)

    @pytest.mark.parametrize("index", [0, 1, 2, 3])
    def test_marginals_maximally_mixed(self, index):
        rho = qd.bell_state(index)
        assert np.trace(rho.mat).real == pytest.approx(1.0)
        assert_allclose(qd.partial_trace(rho, "A"), ID2 / 2, atol=1e-14)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            qd.bell_state(4)


class TestFourNonorthogonal:
    def test_trace(self, eq4_state):
        assert np.trace(eq4_state.mat).real == pytest.approx(1.0)

    def test_has_discord(self, eq4_state):
        assert not qd.zero_discord_test(eq4_state).is_zero_discord

    def test_geometric_discord_positive(self, eq4_state):
        value = qd.geometric_discord_2q(eq4_state).value
        assert value > 1e-3
        oracle = qd.geometric_discord_oracle(eq4_state, restarts=16)
        assert oracle == pytest.approx(value, abs=1e-6)


class TestFacetStates:
    @pytest.mark.parametrize("signs", [(1, 1, 1), (-1, 1, -1), (-1, -1, -1)])
    def test_bloch_and_marginals(self, signs):
        rho = qd.facet_state(*signs)
        assert_allclose(qd.partial_trace(rho, "A"), ID2 / 2, atol=1e-14)
        b = qd.bloch_triple(rho)
        assert_allclose(np.diag(b.corr), np.array(signs) / 3, atol=1e-12)

    def test_separable_region(self):
        rho = qd.facet_state(1, -1, 1)
        t = np.diag(qd.bloch_triple(rho).corr)
        assert qd.octahedron_contains(t)

    def test_discord_value(self):
        assert qd.geometric_discord_2q(qd.facet_state(1, 1, -1)).value == pytest.approx(
            1 / 18, abs=1e-12
        )

    def test_rejects_bad_signs(self):
        with pytest.raises(ValueError):
            qd.facet_state(1, 0, 1)


class TestClassicalQuantum:
    def test_single_term_is_product(self):
        rho_b = np.array([[0.7, 0.1], [0.1, 0.3]], dtype=complex)
        rho = qd.classical_quantum_state([1.0], [np.array([1, 0])], [rho_b])
        assert_allclose(rho.mat, np.kron(_pure([1, 0]), rho_b), atol=1e-15)

    def test_correlated_bits(self, classical_bits):
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 0] = expected[3, 3] = 0.5
        assert_allclose(classical_bits.mat, expected)

    def test_equal_states_give_product(self):
        rho_b = np.array([[0.6, 0.2j], [-0.2j, 0.4]], dtype=complex)
        rho = qd.classical_quantum_state(
            [0.5, 0.5], [np.array([1, 0]), np.array([0, 1])], [rho_b, rho_b]
        )
        assert_allclose(rho.mat, np.kron(ID2 / 2, rho_b), atol=1e-15)

    def test_rank_bounded_by_dim_a(self):
        rng = np.random.default_rng(0)
        for trial in range(20):
            dim_a = int(rng.integers(2, 4))
            dim_b = int(rng.integers(2, 4))
            u = qd.random_unitary(dim_a, 100 + trial)
            k = int(rng.integers(1, dim_a + 1))
            p = rng.uniform(0.05, 1.0, k)
            p /= p.sum()
            states = []
            for i in range(k):
                g = rng.standard_normal((dim_b, dim_b)) + 1j * rng.standard_normal((dim_b, dim_b))
                m = g @ g.conj().T
                states.append(m / np.trace(m).real)
            rho = qd.classical_quantum_state(p, [u[:, i] for i in range(k)], states)
            cm = qd.correlation_matrix(rho)
            assert qd.numerical_rank(cm) <= dim_a

    def test_rejects_bad_probabilities(self):
        with pytest.raises(qd.ValidationError):
            qd.classical_quantum_state(
                [0.7, 0.7], [np.array([1, 0]), np.array([0, 1])], [ID2 / 2, ID2 / 2]
            )

    def test_rejects_nonorthogonal_kets(self):
        plus = np.array([1, 1]) / np.sqrt(2)
        with pytest.raises(qd.ValidationError):
            qd.classical_quantum_state([0.5, 0.5], [np.array([1, 0]), plus], [ID2 / 2, ID2 / 2])


class TestRandomGenerators:
    def test_density_matrix_valid_and_reproducible(self):
        a = qd.random_density_matrix(2, 3, 42)
        b = qd.random_density_matrix(2, 3, 42)
        assert np.array_equal(a.mat, b.mat)
        assert np.trace(a.mat).real == pytest.approx(1.0)

    def test_unitary_is_unitary(self):
        u = qd.random_unitary(8, 3)
        assert np.linalg.norm(u.conj().T @ u - np.eye(8)) <= 1e-10
        assert abs(np.linalg.det(u)) == pytest.approx(1.0, abs=1e-10)

    def test_unitary_dim_one(self):
        u = qd.random_unitary(1, 5)
        assert abs(u[0, 0]) == pytest.approx(1.0, abs=1e-12)

    def test_haar_trace_moment(self):
        # E |Tr U|^2 = 1 for the Haar measure in any dimension.
        vals = np.array([abs(np.trace(qd.random_unitary(8, seed))) ** 2 for seed in range(500)])
        stderr = vals.std(ddof=1) / np.sqrt(len(vals))
        assert abs(vals.mean() - 1.0) <= 3 * stderr


class TestMeasurePrepareChannel:
    def test_orthonormal_kets_leave_classical_state_alone(self, classical_bits):
        out = qd.measure_prepare_channel_a(
            classical_bits, [np.array([1, 0]), np.array([0, 1])]
        )
        assert_allclose(out.mat, classical_bits.mat, atol=1e-15)

    def test_nonorthogonal_kets_create_discord(self, classical_bits):
        plus = np.array([1, 1]) / np.sqrt(2)
        out = qd.measure_prepare_channel_a(classical_bits, [np.array([1, 0]), plus])
        assert not qd.zero_discord_test(out).is_zero_discord

    def test_discord_increases_under_local_channel(self, classical_bits):
        before = qd.geometric_discord_2q(classical_bits).value
        plus = np.array([1, 1]) / np.sqrt(2)
        out = qd.measure_prepare_channel_a(classical_bits, [np.array([1, 0]), plus])
        after = qd.geometric_discord_2q(out).value
        assert before <= 1e-12
        assert after > 1e-3

    def test_preserves_b_marginal(self):
        rho = qd.random_density_matrix(2, 2, 9)
        plus = np.array([1, 1]) / np.sqrt(2)
        out = qd.measure_prepare_channel_a(rho, [np.array([1, 0]), plus])
        assert_allclose(qd.partial_trace(out, "B"), qd.partial_trace(rho, "B"), atol=1e-12)

    def test_rejects_unnormalized_kets(self):
        rho = qd.random_density_matrix(2, 2, 9)
        with pytest.raises(qd.ValidationError):
            qd.measure_prepare_channel_a(rho, [np.array([1, 1]), np.array([0, 1])])
