"""Quantum mutual information and entropic discord via measurement optimization.

Classical correlation Q_A is the entropy drop of B after the best projective
measurement on A; discord is mutual information minus Q_A.  The optimizer
covers a qubit A side: a deterministic Fibonacci sphere grid of measurement
directions followed by simplex refinement from the best grid points.  The
projective optimum is an upper bound on the POVM-optimized discord and is
flagged as such in reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from ._accel import conditional_entropy_scan
from .errors import DimensionError, ValidationError
from .linalg import DensityMatrix, partial_trace, von_neumann_entropy

OUTCOME_FLOOR = 1e-12
GRID_POINTS = 2048
REFINE_ITERS = 200
REFINE_STARTS = 8

MEASUREMENT_CLASS = "projective optimum (upper bound on discord)"


@dataclass(frozen=True)
class MeasurementA:
    """Complete rank-1 projective measurement on subsystem A."""

    projectors: np.ndarray

    def __post_init__(self):
        ops = np.array(self.projectors, dtype=complex)
        ops.setflags(write=False)
        object.__setattr__(self, "projectors", ops)
        if ops.ndim != 3 or ops.shape[1] != ops.shape[2] or ops.shape[0] != ops.shape[1]:
            raise DimensionError(f"expected d rank-1 projectors of size d, got {ops.shape}")
        for p in ops:
            if np.linalg.norm(p @ p - p) > 1e-10:
                raise ValidationError("projectors must be idempotent")
            if abs(np.trace(p) - 1.0) > 1e-10:
                raise ValidationError("projectors must be rank 1")
        if np.linalg.norm(ops.sum(axis=0) - np.eye(ops.shape[1])) > 1e-10:
            raise ValidationError("projectors must resolve the identity")

    @classmethod
    def from_kets(cls, kets) -> "MeasurementA":
        return cls(np.stack([np.outer(k, np.conj(k)) for k in np.asarray(kets, dtype=complex)]))

    @classmethod
    def from_direction(cls, e) -> "MeasurementA":
        """Qubit measurement along a Bloch direction: (1 +- e.sigma)/2."""
        e = np.asarray(e, dtype=float)
        e = e / np.linalg.norm(e)
        esig = np.array(
            [[e[2], e[0] - 1j * e[1]], [e[0] + 1j * e[1], -e[2]]], dtype=complex
        )
        eye = np.eye(2, dtype=complex)
        return cls(np.stack([(eye + esig) / 2.0, (eye - esig) / 2.0]))


@dataclass(frozen=True)
class ConditionalEnsemble:
    """Outcome probabilities and normalized conditional states of B."""

    probs: np.ndarray
    states: list


def conditional_ensemble(rho: DensityMatrix, m: MeasurementA) -> ConditionalEnsemble:
    """Post-measurement ensemble of B; outcomes below 1e-12 are omitted."""
    if m.projectors.shape[1] != rho.dim_a:
        raise DimensionError(
            f"measurement dim {m.projectors.shape[1]} does not match d_A {rho.dim_a}"
        )
    t = rho.blocks()
    probs = []
    states = []
    for p in m.projectors:
        # Tr_A[(P x 1) rho (P x 1)] = sum_{a a'} P[a', a] rho[a, :, a', :]
        block = np.einsum("ca,abcd->bd", p, t)
        pk = float(np.trace(block).real)
        if pk < OUTCOME_FLOOR:
            continue
        state = block / pk
        probs.append(pk)
        states.append(0.5 * (state + state.conj().T))
    return ConditionalEnsemble(probs=np.array(probs), states=states)


def mutual_information(rho: DensityMatrix) -> float:
    """I = H(A) + H(B) - H(AB) in bits."""
    return (
        von_neumann_entropy(partial_trace(rho, "A"))
        + von_neumann_entropy(partial_trace(rho, "B"))
        - von_neumann_entropy(rho)
    )


def fibonacci_sphere(n: int) -> np.ndarray:
    """Deterministic quasi-uniform lattice of n unit vectors."""
    i = np.arange(n)
    z = 1.0 - (2.0 * i + 1.0) / n
    r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = i * np.pi * (3.0 - np.sqrt(5.0))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _pauli_blocks(rho: DensityMatrix):
    """B-side blocks combined along Pauli components of the measured qubit.

    For a direction e the unnormalized post-measurement blocks of B are
    (g0 +- (e1 gx + e2 gy + e3 gz))/2.
    """
    t = rho.blocks()
    r00 = np.ascontiguousarray(t[0, :, 0, :])
    r01 = np.ascontiguousarray(t[0, :, 1, :])
    r10 = np.ascontiguousarray(t[1, :, 0, :])
    r11 = np.ascontiguousarray(t[1, :, 1, :])
    return r00 + r11, r01 + r10, 1j * (r01 - r10), r00 - r11


def _angles_to_dir(angles: np.ndarray) -> np.ndarray:
    theta, phi = angles
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


@dataclass(frozen=True)
class ClassicalCorrelationResult:
    """Optimized classical correlation with the winning measurement."""

    value: float
    best_direction: np.ndarray
    best_measurement: MeasurementA
    min_conditional_entropy: float
    grid_points: int
    refine_iters: int


def classical_correlation_qa(
    rho: DensityMatrix,
    grid_points: int = GRID_POINTS,
    refine_iters: int = REFINE_ITERS,
    refine_starts: int = REFINE_STARTS,
) -> ClassicalCorrelationResult:
    """Q_A = H(B) - min over projective A-measurements of sum_k p_k H(B|k).

    Deterministic: Fibonacci grid, then Nelder-Mead refinement in sphere
    angles from the best grid points; ties resolve to the lowest lattice
    index.  Only a qubit A side is supported.
    """
    if rho.dim_a != 2:
        raise DimensionError(
            f"measurement optimizer supports d_A = 2 only, got d_A = {rho.dim_a}"
        )
    g0, gx, gy, gz = _pauli_blocks(rho)
    dirs = fibonacci_sphere(grid_points)
    values = conditional_entropy_scan(g0, gx, gy, gz, dirs)

    best_order = np.argsort(values, kind="stable")
    best_idx = int(best_order[0])
    best_val = float(values[best_idx])
    best_dir = dirs[best_idx]

    def objective(angles):
        d = np.ascontiguousarray(_angles_to_dir(angles).reshape(1, 3))
        return float(conditional_entropy_scan(g0, gx, gy, gz, d)[0])

    for idx in best_order[:refine_starts]:
        e = dirs[int(idx)]
        theta = float(np.arccos(np.clip(e[2], -1.0, 1.0)))
        phi = float(np.arctan2(e[1], e[0]))
        res = minimize(
            objective,
            np.array([theta, phi]),
            method="Nelder-Mead",
            options={
                "maxiter": refine_iters,
                "xatol": 1e-10,
                "fatol": 1e-13,
            },
        )
        if res.fun < best_val - 1e-15:
            best_val = float(res.fun)
            best_dir = _angles_to_dir(res.x)

    h_b = von_neumann_entropy(partial_trace(rho, "B"))
    return ClassicalCorrelationResult(
        value=h_b - best_val + 0.0,
        best_direction=best_dir,
        best_measurement=MeasurementA.from_direction(best_dir),
        min_conditional_entropy=best_val,
        grid_points=grid_points,
        refine_iters=refine_iters,
    )


def entropic_discord(
    rho: DensityMatrix,
    grid_points: int = GRID_POINTS,
    refine_iters: int = REFINE_ITERS,
    refine_starts: int = REFINE_STARTS,
) -> float:
    """Discord D_A = I - Q_A in bits, clamped at zero against float noise."""
    qa = classical_correlation_qa(rho, grid_points, refine_iters, refine_starts)
    return max(0.0, mutual_information(rho) - qa.value)
