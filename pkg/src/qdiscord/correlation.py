"""Correlation matrix of a bipartite state and the zero-discord criterion.

Expanding rho = sum_nm r_nm A_n x B_m over orthonormal Hermitian bases gives
a real matrix R whose SVD rotates the local bases into operators S_n, F_n
with rho = sum_n c_n S_n x F_n.  The state has zero discord iff the retained
S_n pairwise commute; rank(R) > d_A alone already proves non-zero discord.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import HermitianBasis, gell_mann_basis
from .errors import DimensionError, ValidationError
from .linalg import DensityMatrix, commutator_norm, svd_real

RANK_ATOL = 1e-10
RANK_RTOL = 1e-9
COMMUTATOR_TOL = 1e-9


@dataclass(frozen=True)
class CorrelationMatrix:
    """Expansion coefficients r_nm with their SVD factors.

    r = svd_u @ diag(singulars) @ svd_w.T; rank_tolerance is the resolved
    singular-value cutoff used for the numerical rank.
    """

    r: np.ndarray
    basis_a: HermitianBasis
    basis_b: HermitianBasis
    svd_u: np.ndarray
    svd_w: np.ndarray
    singulars: np.ndarray
    rank_tolerance: float
    dim_a: int
    dim_b: int


@dataclass(frozen=True)
class LocalOperatorPair:
    """One term c_n S_n x F_n of the SVD-rotated product expansion."""

    weight: float
    op_a: np.ndarray
    op_b: np.ndarray


@dataclass(frozen=True)
class ZeroDiscordVerdict:
    is_zero_discord: bool
    rank_l: int
    max_commutator: float
    witness_triggered: bool


@dataclass(frozen=True)
class PartialRowsVerdict:
    discord_proven: bool
    independent_count: int


def correlation_matrix(
    rho: DensityMatrix,
    basis_a: HermitianBasis | None = None,
    basis_b: HermitianBasis | None = None,
    atol: float = RANK_ATOL,
    rtol: float = RANK_RTOL,
) -> CorrelationMatrix:
    """Correlation matrix r_nm = Tr[rho (A_n x B_m)] with eager SVD."""
    basis_a = basis_a if basis_a is not None else gell_mann_basis(rho.dim_a)
    basis_b = basis_b if basis_b is not None else gell_mann_basis(rho.dim_b)
    if basis_a.dim != rho.dim_a or basis_b.dim != rho.dim_b:
        raise DimensionError(
            f"basis dims ({basis_a.dim}, {basis_b.dim}) do not match state dims "
            f"({rho.dim_a}, {rho.dim_b})"
        )
    t = rho.blocks()
    # r_nm = sum_{a b a' b'} rho[a,b,a',b'] A_n[a',a] B_m[b',b]
    half = np.einsum("abcd,nca->nbd", t, basis_a.ops)
    r = np.einsum("nbd,mdb->nm", half, basis_b.ops).real
    u, c, w = svd_real(r)
    tau = max(atol, rtol * (c[0] if c.size else 0.0))
    return CorrelationMatrix(
        r=r,
        basis_a=basis_a,
        basis_b=basis_b,
        svd_u=u,
        svd_w=w,
        singulars=c,
        rank_tolerance=tau,
        dim_a=rho.dim_a,
        dim_b=rho.dim_b,
    )


def numerical_rank(cm: CorrelationMatrix) -> int:
    """Number of singular values above the resolved cutoff."""
    return int(np.sum(cm.singulars > cm.rank_tolerance))


def local_operators(cm: CorrelationMatrix) -> list[LocalOperatorPair]:
    """Retained terms (c_n, S_n, F_n); S_n mixes basis A with column n of U."""
    rank = numerical_rank(cm)
    pairs = []
    for n in range(rank):
        op_a = np.einsum("k,kij->ij", cm.svd_u[:, n], cm.basis_a.ops)
        op_b = np.einsum("k,kij->ij", cm.svd_w[:, n], cm.basis_b.ops)
        pairs.append(LocalOperatorPair(weight=float(cm.singulars[n]), op_a=op_a, op_b=op_b))
    return pairs


def reconstruct_state(cm: CorrelationMatrix) -> DensityMatrix:
    """Rebuild the state sum_nm r_nm A_n x B_m from its correlation matrix."""
    t = np.einsum("nm,nac,mbd->abcd", cm.r, cm.basis_a.ops, cm.basis_b.ops)
    d = cm.dim_a * cm.dim_b
    return DensityMatrix(t.reshape(d, d), cm.dim_a, cm.dim_b)


def _common_eigenbasis_exists(ops: list[np.ndarray], tol: float) -> bool:
    """Whether the eigenbasis of a generically weighted sum diagonalizes all ops.

    Deterministic weights (seed 0) make this a one-shot test for a common
    eigenbasis of a commuting family; it guards the pairwise commutator check
    against SVD basis ambiguity under degenerate singular values.
    """
    rng = np.random.default_rng(0)
    weights = rng.standard_normal(len(ops))
    mix = sum(w * op for w, op in zip(weights, ops))
    _, v = np.linalg.eigh(0.5 * (mix + mix.conj().T))
    for op in ops:
        rotated = v.conj().T @ op @ v
        off = rotated - np.diag(np.diagonal(rotated))
        if np.linalg.norm(off) > tol * max(np.linalg.norm(op), 1e-300):
            return False
    return True


def zero_discord_test(
    rho: DensityMatrix,
    tol: float = COMMUTATOR_TOL,
    basis_a: HermitianBasis | None = None,
    basis_b: HermitianBasis | None = None,
    rank_atol: float = RANK_ATOL,
    rank_rtol: float = RANK_RTOL,
) -> ZeroDiscordVerdict:
    """Decide whether a state has zero discord with respect to subsystem A.

    Checks the rank witness first (rank > d_A proves discord), then the
    pairwise commutators of the retained S_n normalized by their Frobenius
    norms, with a joint-diagonalization fallback for degenerate spectra.
    """
    cm = correlation_matrix(rho, basis_a, basis_b, atol=rank_atol, rtol=rank_rtol)
    rank = numerical_rank(cm)
    witness = rank > rho.dim_a

    ops = [p.op_a for p in local_operators(cm)]
    norms = [max(np.linalg.norm(op), 1e-300) for op in ops]
    max_comm = 0.0
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            c = commutator_norm(ops[i], ops[j]) / (norms[i] * norms[j])
            if c > max_comm:
                max_comm = c

    if witness:
        is_zero = False
    elif max_comm <= tol:
        is_zero = True
    else:
        is_zero = _common_eigenbasis_exists(ops, tol)
    return ZeroDiscordVerdict(
        is_zero_discord=is_zero,
        rank_l=rank,
        max_commutator=max_comm,
        witness_triggered=witness,
    )


def _coerce_rows(rows) -> tuple[np.ndarray, np.ndarray]:
    indices = []
    vectors = []
    for a_index, values in rows:
        indices.append(int(a_index))
        vectors.append(np.asarray(values, dtype=float))
    if len(set(indices)) != len(indices):
        raise ValidationError("duplicate a_index in rows")
    if not vectors:
        raise ValidationError("no rows supplied")
    lengths = {v.shape for v in vectors}
    if len(lengths) != 1 or vectors[0].ndim != 1:
        raise DimensionError("rows must be 1-d vectors of equal length")
    stacked = np.stack(vectors)
    if not np.all(np.isfinite(stacked)):
        raise ValidationError("rows contain non-finite values")
    return np.array(indices), stacked


def partial_rows_witness(
    rows,
    dim_a: int,
    atol: float = RANK_ATOL,
    rtol: float = RANK_RTOL,
) -> PartialRowsVerdict:
    """Discord witness from a subset of correlation-matrix rows.

    ``rows`` is an iterable of (a_index, vector) pairs.  Finding d_A + 1
    linearly independent rows proves the state has non-zero discord.
    """
    _, stacked = _coerce_rows(rows)
    c = np.linalg.svd(stacked, compute_uv=False)
    tau = max(atol, rtol * (c[0] if c.size else 0.0))
    count = int(np.sum(c > tau))
    return PartialRowsVerdict(discord_proven=count >= dim_a + 1, independent_count=count)


def certifying_rows(rows, dim_a: int, atol: float = RANK_ATOL, rtol: float = RANK_RTOL):
    """Greedy minimal list of a_index values whose rows certify the witness.

    Returns None when the supplied rows cannot prove discord.
    """
    indices, stacked = _coerce_rows(rows)
    picked: list[int] = []
    kept = np.empty((0, stacked.shape[1]))
    for pos in range(len(indices)):
        candidate = np.vstack([kept, stacked[pos]])
        c = np.linalg.svd(candidate, compute_uv=False)
        tau = max(atol, rtol * c[0])
        if int(np.sum(c > tau)) == candidate.shape[0]:
            kept = candidate
            picked.append(int(indices[pos]))
            if len(picked) >= dim_a + 1:
                return picked
    return None
