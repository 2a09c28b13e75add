"""Decision problems as quantum state discrimination.

Construct and verify systems of commuting filters that equipartition
finite state spaces, build oracles for boolean functions, and solve the
one-bit identification, generalized two-argument, and parity decision
problems exactly with dense complex linear algebra.
"""

from .boolfuncs import (
    BooleanFunction,
    Partition,
    decision_partition,
    decision_partition_diff,
    decision_predicate,
    deutsch_partition,
    enumeration_by_weight,
    is_constant,
    parity,
    parity_partition,
    sum_function,
)
from .filters import (
    Filter,
    FilterSystem,
    NotAnEigenvectorError,
    canonical_system,
    check_k2_permutation_claim,
    permute_columns,
    separates,
    systems_equivalent,
    transform_system,
    verify_properties,
)
from .linalg import (
    DEFAULT_TOL,
    apply,
    eigenvalue_of,
    equal_up_to_global_phase,
    is_hermitian,
    is_normalized,
    is_projector,
    is_unitary,
    kron,
)
from .oracles import (
    DecisionOutcome,
    InternalCheckError,
    PhasePattern,
    bitflip_oracle,
    decide,
    deutsch_decide,
    deutsch_filter_setup,
    deutsch_run,
    generalized_deutsch_setup,
    parity_classical,
    parity_pairwise_quantum,
    parity_separability,
    phase_pattern,
    product_oracle,
    sample_eigenvalue,
    sum_phase_pattern,
    vf_encode,
)
from .states import (
    H,
    X,
    Context,
    basis_state,
    bits_to_index,
    context_from_basis,
    identity,
    index_to_bits,
    sigma,
    standard_context,
    transform_context,
)
from .tables import TABLE_NAMES, emit_table, golden_diff

__version__ = "0.1.0"
