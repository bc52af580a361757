from .channels import (
    apply_reset_channel,
    apply_single_qubit_channel,
    gate_then_reset_superoperator,
    kraus_completeness,
    kraus_superoperator,
    reset_kraus_operators,
    reset_superoperator,
)
from .gates import (
    Axis,
    apply_cnot,
    apply_rzz,
    apply_single_qubit_rotation,
    apply_single_qubit_unitary,
    rotation_matrix,
)
from .state import (
    MAX_QUBITS,
    MixedState,
    PureState,
    QuantumState,
    SimulationMode,
    basis_state,
    check_physical,
    expect_z,
    expect_zz,
    init_plus,
    probabilities,
    purity,
)

__all__ = [
    "MAX_QUBITS",
    "Axis",
    "MixedState",
    "PureState",
    "QuantumState",
    "SimulationMode",
    "apply_cnot",
    "apply_reset_channel",
    "apply_rzz",
    "apply_single_qubit_channel",
    "apply_single_qubit_rotation",
    "apply_single_qubit_unitary",
    "basis_state",
    "check_physical",
    "expect_z",
    "expect_zz",
    "gate_then_reset_superoperator",
    "init_plus",
    "kraus_completeness",
    "kraus_superoperator",
    "probabilities",
    "purity",
    "reset_kraus_operators",
    "reset_superoperator",
    "rotation_matrix",
]
