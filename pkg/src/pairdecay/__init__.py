"""Entanglement and nonlocality decay for a pair of two-level atoms.

Each atom sits in its own infinite-temperature bath, raising and lowering
at equal rate. The package provides the generator and two propagators for
that dynamics, concurrence and Bell-criterion diagnostics, and solvers for
the two characteristic times of a trajectory: when entanglement dies and
when Bell violations stop. States are plain 4x4 complex numpy arrays in
the product basis |11>, |10>, |01>, |00>.
"""

from .dynamics import (
    EvolutionConfig,
    Liouvillian,
    build_liouvillian,
    collective_rhs,
    evolve_numeric,
    evolve_x_closed,
    pair_rhs,
    single_qubit_rhs,
)
from .entanglement import (
    ConcurrenceBreakdown,
    concurrence,
    concurrence_x,
    concurrence_x_collective,
    concurrence_x_evolved,
    entanglement_of_formation,
    is_separable_ppt,
    partial_transpose,
    spin_flip,
)
from .errors import (
    ComplexRoot,
    NoBracket,
    NonRealCorrelation,
    NotHermitian,
    NotPositive,
    NotPure,
    NotXClass,
    PairdecayError,
    TraceNotOne,
)
from .nonlocality import (
    EvolvedPureM,
    correlation_matrix,
    horodecki_m,
    horodecki_m_pure,
    violation_degree,
)
from .states import (
    CollectiveComponents,
    XStateParams,
    bell_phi,
    canonical_to_collective,
    collective_to_canonical,
    dump_state,
    from_state_json,
    hermitian_eigenvalues,
    is_x_class,
    linear_entropy,
    load_state,
    maximally_mixed,
    mems,
    partial_trace,
    pure_with_concurrence,
    purity,
    random_density,
    random_x_state,
    to_state_json,
    validate_density,
    werner,
    x_class_residual,
    x_state,
)
from .timescales import (
    PureLocalityTime,
    TimescaleResult,
    decoherence_rate,
    disentanglement_time,
    disentanglement_time_mems,
    disentanglement_time_pure,
    disentanglement_time_single_excitation,
    disentanglement_time_werner,
    locality_time,
    locality_time_mems,
    locality_time_pure,
    locality_time_werner,
)

__version__ = "0.1.0"

__all__ = [
    "EvolutionConfig",
    "Liouvillian",
    "build_liouvillian",
    "collective_rhs",
    "evolve_numeric",
    "evolve_x_closed",
    "pair_rhs",
    "single_qubit_rhs",
    "ConcurrenceBreakdown",
    "concurrence",
    "concurrence_x",
    "concurrence_x_collective",
    "concurrence_x_evolved",
    "entanglement_of_formation",
    "is_separable_ppt",
    "partial_transpose",
    "spin_flip",
    "ComplexRoot",
    "NoBracket",
    "NonRealCorrelation",
    "NotHermitian",
    "NotPositive",
    "NotPure",
    "NotXClass",
    "PairdecayError",
    "TraceNotOne",
    "EvolvedPureM",
    "correlation_matrix",
    "horodecki_m",
    "horodecki_m_pure",
    "violation_degree",
    "CollectiveComponents",
    "XStateParams",
    "bell_phi",
    "canonical_to_collective",
    "collective_to_canonical",
    "dump_state",
    "from_state_json",
    "hermitian_eigenvalues",
    "is_x_class",
    "linear_entropy",
    "load_state",
    "maximally_mixed",
    "mems",
    "partial_trace",
    "pure_with_concurrence",
    "purity",
    "random_density",
    "random_x_state",
    "to_state_json",
    "validate_density",
    "werner",
    "x_class_residual",
    "x_state",
    "PureLocalityTime",
    "TimescaleResult",
    "decoherence_rate",
    "disentanglement_time",
    "disentanglement_time_mems",
    "disentanglement_time_pure",
    "disentanglement_time_single_excitation",
    "disentanglement_time_werner",
    "locality_time",
    "locality_time_mems",
    "locality_time_pure",
    "locality_time_werner",
    "__version__",
]
