"""Exact correlation dynamics for two atoms in separate thermal cavities.

The library computes the time-evolved two-qubit reduced state of two
atom-cavity pairs (resonant coupling, thermal cavity mixtures, atoms starting
in the even Bell state) and two correlation measures on it: the trace-norm
geometric quantum discord (doubled normalization) and the Wootters
concurrence. A brute-force Fock-space evolver and a variational discord
search serve as independent oracles, and a sweep engine extracts dead zones
of the concurrence and the robust revival time near gt = 3*pi.
"""

from .errors import (
    ConsistencyError,
    ConvergenceError,
    InvalidStateError,
    LeakageError,
    ThermalJcError,
    TruncationLimitError,
)
from .fock import (
    DeviationReport,
    FockBasis,
    build_hamiltonian,
    compare_with_analytic,
    default_basis,
    evolve_and_reduce,
    evolve_density,
    initial_state,
    reduce_to_atoms,
    total_excitation,
    xform_deviation,
    xstate_from_matrix,
)
from .measures import (
    concurrence_general,
    concurrence_xstate,
    discord_1norm_xstate,
)
from .model import (
    ModelParams,
    TruncationSpec,
    atomic_xstate,
    measures_at,
    measures_on_grid,
    thermal_weight,
    truncation_order,
)
from .states import (
    BlochForm,
    XState,
    bloch_compose,
    bloch_decompose,
    check_density_matrix,
)
from .sweep import (
    Grid1D,
    RobustTimeRecord,
    SweepRecord,
    esd_intervals,
    intervals_from_samples,
    robust_time,
    robust_time_map,
    sweep_time_mpn,
)
from .variational import SearchBudget, discord_1norm_variational

__all__ = [
    "BlochForm",
    "ConsistencyError",
    "ConvergenceError",
    "DeviationReport",
    "FockBasis",
    "Grid1D",
    "InvalidStateError",
    "LeakageError",
    "ModelParams",
    "RobustTimeRecord",
    "SearchBudget",
    "SweepRecord",
    "ThermalJcError",
    "TruncationLimitError",
    "TruncationSpec",
    "XState",
    "atomic_xstate",
    "bloch_compose",
    "bloch_decompose",
    "build_hamiltonian",
    "check_density_matrix",
    "compare_with_analytic",
    "concurrence_general",
    "concurrence_xstate",
    "default_basis",
    "discord_1norm_variational",
    "discord_1norm_xstate",
    "esd_intervals",
    "evolve_and_reduce",
    "evolve_density",
    "initial_state",
    "intervals_from_samples",
    "measures_at",
    "measures_on_grid",
    "reduce_to_atoms",
    "robust_time",
    "robust_time_map",
    "sweep_time_mpn",
    "thermal_weight",
    "total_excitation",
    "truncation_order",
    "xform_deviation",
    "xstate_from_matrix",
]

__version__ = "0.1.0"
