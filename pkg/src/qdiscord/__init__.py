"""qdiscord: decide, quantify and exploit quantum discord in bipartite states.

Core surface: the SVD/commutator zero-discord criterion with its rank
witness, closed-form and oracle geometric discord for two qubits, entropic
discord by projective measurement optimization, and DQC1 trace-estimation
analysis.
"""

from .basis import HermitianBasis, expand, gell_mann_basis, reconstruct
from .correlation import (
    CorrelationMatrix,
    LocalOperatorPair,
    PartialRowsVerdict,
    ZeroDiscordVerdict,
    certifying_rows,
    correlation_matrix,
    local_operators,
    numerical_rank,
    partial_rows_witness,
    reconstruct_state,
    zero_discord_test,
)
from .dqc1 import (
    Dqc1Classicality,
    Dqc1Instance,
    TraceEstimate,
    dqc1_classicality_check,
    dqc1_exact_readout,
    dqc1_output_state,
    dqc1_sample_trace,
)
from .entropic import (
    ClassicalCorrelationResult,
    ConditionalEnsemble,
    MeasurementA,
    classical_correlation_qa,
    conditional_ensemble,
    entropic_discord,
    fibonacci_sphere,
    mutual_information,
)
from .errors import (
    DimensionError,
    NonHermitianError,
    NotUnitaryError,
    OutsidePhysicalError,
    ParseError,
    QDiscordError,
    ValidationError,
)
from .geometric import (
    BlochTriple,
    GeometricResult,
    ZeroDiscordPoint,
    bell_diagonal_discord,
    bloch_triple,
    geometric_discord_2q,
    geometric_discord_oracle,
    hs_distance_sq,
    octahedron_contains,
    random_zero_discord_state,
    state_from_bloch,
    tetrahedron_contains,
)
from .linalg import (
    DensityMatrix,
    Spectrum,
    commutator_norm,
    eig_hermitian,
    hs_inner,
    partial_trace,
    svd_real,
    swap_subsystems,
    tensor,
    von_neumann_entropy,
)
from .states import (
    bell_diagonal_state,
    bell_state,
    classical_quantum_state,
    facet_state,
    four_nonorthogonal_state,
    measure_prepare_channel_a,
    projector,
    random_density_matrix,
    random_unitary,
)

__version__ = "0.1.0"
