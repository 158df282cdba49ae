"""Thermal entanglement and teleportation in the three-qubit Heisenberg XX ring."""

__version__ = "0.1.0"

from .criticality import (
    CriticalResult,
    NoTransition,
    asymptotic_T1_antiferro,
    asymptotic_T1_ferro,
    phase_scan,
    solve_T1,
    solve_T2,
    t2_small_T_approx,
)
from .entanglement import (
    closed_form_lambdas,
    concurrence_zero_T,
    thermal_concurrence,
    wootters_concurrence,
)
from .ring import (
    RingParams,
    analytic_spectrum,
    build_hamiltonian,
    ground_state_limit,
    partition_function,
    reduced_pair_state,
    thermal_state,
    thermal_state_oracle,
)
from .teleport import (
    average_fidelity_closed,
    average_fidelity_of_resource,
    average_fidelity_quadrature,
    average_fidelity_zero_T,
    quantum_advantage,
    run_protocol,
)
