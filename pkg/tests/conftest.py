import numpy as np
import pytest

import qdiscord as qd


@pytest.fixture(scope="session")
def bell():
    return qd.bell_state(0)


@pytest.fixture(scope="session")
def product_mixed():
    """Product of two seeded single-qubit mixed states."""
    rng = np.random.default_rng(11)
    parts = []
    for _ in range(2):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        m = g @ g.conj().T
        parts.append(m / np.trace(m).real)
    return qd.DensityMatrix(np.kron(parts[0], parts[1]), 2, 2)


@pytest.fixture(scope="session")
def classical_bits():
    """(|00><00| + |11><11|)/2: perfectly correlated classical bits."""
    return qd.classical_quantum_state(
        [0.5, 0.5],
        [np.array([1, 0]), np.array([0, 1])],
        [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])],
    )


@pytest.fixture(scope="session")
def eq4_state():
    return qd.four_nonorthogonal_state()
