"""Capacities and capacity bounds of locally recoverable codes over BEC, BSC and
general binary-input symmetric channels, with brute-force oracles and Monte
Carlo checks of the underlying ensembles."""

from .blockstats import (
    BecOutput,
    BlockChannel,
    bec_block_mi,
    bec_block_mi_bruteforce,
    bec_block_output_prob,
    bsc_block_mi,
    bsc_block_output_prob,
    hamming_rho3_bsc_mi,
    local_code_bec_mi_exact,
    local_code_bsc_mi,
)
from .capacity import (
    BoundKind,
    CapacityResult,
    cap_bec_hamming_rho3_lower,
    cap_bec_lrc,
    cap_bec_rho_converse,
    cap_bsc_hamming_rho3_lower,
    bsc_bound_gaps,
    cap_bsc_lrc_bounds,
    cap_general_bounds,
    gap,
)
from .codes import (
    CosetWeightTable,
    LinearCode,
    LrcSpec,
    RepairPartition,
    coset_weight_table,
    hamming_code,
    linear_lrc_generator,
    sample_lrc_codeword,
    single_parity_code,
    validate_locality,
)
from .errors import BudgetExceeded, DimensionMismatch, DomainError, InvalidDistribution
from .experiments import (
    TrialReport,
    bec_decode,
    bec_decode_success_rate,
    bec_transmit,
    bsc_ml_block_error,
    bsc_ml_decode_tiny,
    bsc_transmit,
    estimate_L_I,
    rank_success_rate,
)
from .gf2 import BitMatrix, BitVector
from .infofn import binary_entropy, binary_entropy_inv, bsc_capacity, capacity_from_bias, entropy

__version__ = "0.1.0"
