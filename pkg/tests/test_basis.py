import numpy as np
import pytest
from numpy.testing import assert_allclose

import qdiscord as qd
from qdiscord.linalg import ID2, SIGMA_X, SIGMA_Y, SIGMA_Z


class TestGellMannBasis:
    def test_qubit_basis_is_scaled_paulis(self):
        basis = qd.gell_mann_basis(2)
        s = np.sqrt(2)
        assert_allclose(basis.ops[0], ID2 / s)
        assert_allclose(basis.ops[1], SIGMA_X / s)
        assert_allclose(basis.ops[2], SIGMA_Y / s)
        assert_allclose(basis.ops[3], SIGMA_Z / s)

    def test_identity_trace(self):
        assert np.trace(qd.gell_mann_basis(2).ops[0]).real == pytest.approx(np.sqrt(2))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_gram_matrix_is_identity(self, d):
        basis = qd.gell_mann_basis(d)
        gram = np.einsum("nij,mji->nm", basis.ops, basis.ops).real
        assert np.abs(gram - np.eye(d * d)).max() <= 1e-12

    def test_deterministic(self):
        a = qd.gell_mann_basis(3)
        b = qd.gell_mann_basis(3)
        assert np.array_equal(a.ops, b.ops)

    def test_rejects_small_dim(self):
        with pytest.raises(qd.DimensionError):
            qd.gell_mann_basis(1)


class TestExpand:
    def test_maximally_mixed_qubit(self):
        coeffs = qd.expand(ID2 / 2, qd.gell_mann_basis(2))
        assert_allclose(coeffs, [1 / np.sqrt(2), 0, 0, 0], atol=1e-15)

    def test_sigma_z(self):
        coeffs = qd.expand(SIGMA_Z, qd.gell_mann_basis(2))
        assert_allclose(coeffs, [0, 0, 0, np.sqrt(2)], atol=1e-15)

    def test_basis_elements_give_unit_vectors(self):
        basis = qd.gell_mann_basis(3)
        for k in (0, 3, 8):
            coeffs = qd.expand(basis.ops[k], basis)
            expected = np.zeros(9)
            expected[k] = 1.0
            assert_allclose(coeffs, expected, atol=1e-14)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_completeness_roundtrip(self, d):
        basis = qd.gell_mann_basis(d)
        rng = np.random.default_rng(d)
        for _ in range(100):
            g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            h = (g + g.conj().T) / 2
            back = qd.reconstruct(qd.expand(h, basis), basis)
            assert np.abs(back - h).max() <= 1e-12 * max(1.0, np.abs(h).max())

    def test_rejects_dim_mismatch(self):
        with pytest.raises(qd.DimensionError):
            qd.expand(np.eye(3), qd.gell_mann_basis(2))

    def test_rejects_non_hermitian(self):
        with pytest.raises(qd.NonHermitianError):
            qd.expand(np.array([[0, 1], [0, 0]], dtype=complex), qd.gell_mann_basis(2))
