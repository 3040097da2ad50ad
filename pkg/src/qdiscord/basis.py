"""Orthonormal Hermitian operator bases for local Hilbert-Schmidt spaces.

The generalized Gell-Mann family, rescaled so that Tr(A_i A_j) = delta_ij,
with the normalized identity in slot 0.  Ordering is deterministic: identity,
then symmetric pair operators, antisymmetric pair operators, and diagonal
operators, each group in lexicographic index order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NonHermitianError, ValidationError

ORTHONORMAL_ATOL = 1e-12


@dataclass(frozen=True)
class HermitianBasis:
    """d*d orthonormal Hermitian operators stacked as an (d², d, d) array."""

    dim: int
    ops: np.ndarray

    def __post_init__(self):
        ops = np.array(self.ops, dtype=complex)
        ops.setflags(write=False)
        object.__setattr__(self, "ops", ops)
        d = self.dim
        if ops.shape != (d * d, d, d):
            raise DimensionError(f"expected {(d*d, d, d)} operator stack, got {ops.shape}")
        herm = np.linalg.norm(ops - ops.conj().transpose(0, 2, 1), axis=(1, 2))
        if herm.max() > ORTHONORMAL_ATOL:
            raise NonHermitianError(f"basis operator Hermiticity defect {herm.max():.3e}")
        gram = np.einsum("nij,mji->nm", ops, ops).real
        if np.abs(gram - np.eye(d * d)).max() > ORTHONORMAL_ATOL:
            raise ValidationError("basis is not orthonormal")
        if np.abs(ops[0] - np.eye(d) / np.sqrt(d)).max() > ORTHONORMAL_ATOL:
            raise ValidationError("ops[0] must be the normalized identity")

    def __len__(self) -> int:
        return self.ops.shape[0]


def gell_mann_basis(d: int) -> HermitianBasis:
    """Orthonormal Hermitian basis of the d-dimensional operator space.

    For d = 2 this is {1/sqrt(2), sigma_x/sqrt(2), sigma_y/sqrt(2), sigma_z/sqrt(2)}.
    """
    if d < 2:
        raise DimensionError(f"basis needs dimension >= 2, got {d}")
    ops = [np.eye(d, dtype=complex) / np.sqrt(d)]
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = inv_sqrt2
            m[k, j] = inv_sqrt2
            ops.append(m)
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = -1j * inv_sqrt2
            m[k, j] = 1j * inv_sqrt2
            ops.append(m)
    for l in range(1, d):
        diag = np.zeros(d, dtype=complex)
        diag[:l] = 1.0
        diag[l] = -float(l)
        ops.append(np.diag(diag) / np.sqrt(l * (l + 1)))
    return HermitianBasis(dim=d, ops=np.stack(ops))


def expand(op, basis: HermitianBasis, atol: float = 1e-9) -> np.ndarray:
    """Coefficients v_n = Tr(op A_n) of a Hermitian operator in ``basis``."""
    mat = np.asarray(getattr(op, "mat", op), dtype=complex)
    if mat.shape != (basis.dim, basis.dim):
        raise DimensionError(f"operator shape {mat.shape} does not match basis dim {basis.dim}")
    defect = np.linalg.norm(mat - mat.conj().T)
    if defect > atol:
        raise NonHermitianError(f"Hermiticity defect {defect:.3e}")
    return np.einsum("ij,nji->n", mat, basis.ops).real


def reconstruct(coeffs: np.ndarray, basis: HermitianBasis) -> np.ndarray:
    """Inverse of :func:`expand`: sum_n v_n A_n."""
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.shape != (len(basis),):
        raise DimensionError(f"expected {len(basis)} coefficients, got {coeffs.shape}")
    return np.einsum("n,nij->ij", coeffs, basis.ops)
