"""Pure and mixed quantum states, initialization and Pauli-Z observables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from ..exceptions import ConfigurationError, DataError, QubitIndexError
from ._kernels import ComplexArray, FloatArray, z_signs

MAX_QUBITS = 14
"""Hard cap on the register size. A 14-qubit density matrix already takes 4 GiB."""

SimulationMode = Literal["pure", "mixed"]


@dataclass
class PureState:
    """A statevector over `2**num_qubits` basis states. Gate operations update it in place."""

    amplitudes: ComplexArray
    num_qubits: int

    @property
    def dimension(self) -> int:
        return 1 << self.num_qubits

    def copy(self) -> PureState:
        return PureState(amplitudes=self.amplitudes.copy(), num_qubits=self.num_qubits)

    def density_matrix(self) -> ComplexArray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass
class MixedState:
    """A density matrix over `2**num_qubits` basis states. Gate and channel operations update it in
    place.
    """

    rho: ComplexArray
    num_qubits: int

    @property
    def dimension(self) -> int:
        return 1 << self.num_qubits

    def copy(self) -> MixedState:
        return MixedState(rho=self.rho.copy(), num_qubits=self.num_qubits)

    def density_matrix(self) -> ComplexArray:
        return self.rho


QuantumState = Union[PureState, MixedState]


def check_num_qubits(num_qubits: int) -> int:
    if isinstance(num_qubits, bool) or not isinstance(num_qubits, (int, np.integer)):
        raise ConfigurationError(f"num_qubits must be an integer, got {num_qubits!r}")
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise ConfigurationError(f"num_qubits must be in [1, {MAX_QUBITS}], got {num_qubits}")
    return int(num_qubits)


def check_qubit(state: QuantumState, qubit: int) -> int:
    if not 0 <= qubit < state.num_qubits:
        raise QubitIndexError(
            f"qubit index {qubit} out of range for a {state.num_qubits}-qubit state"
        )
    return int(qubit)


def check_qubit_pair(state: QuantumState, qubit_i: int, qubit_j: int) -> tuple[int, int]:
    check_qubit(state, qubit_i)
    check_qubit(state, qubit_j)
    if qubit_i == qubit_j:
        raise QubitIndexError(f"two-qubit operation needs distinct qubits, got {qubit_i} twice")
    return int(qubit_i), int(qubit_j)


def init_plus(num_qubits: int, mode: SimulationMode = "pure") -> QuantumState:
    """Prepare |+>^Nq.

    Args:
        num_qubits: Register size, between 1 and `MAX_QUBITS`.
        mode: `"pure"` returns a statevector, `"mixed"` the rank-1 density matrix.

    Returns:
        A fresh state.

    Raises:
        ConfigurationError: If `num_qubits` or `mode` is invalid.
    """
    num_qubits = check_num_qubits(num_qubits)
    dim = 1 << num_qubits
    amplitudes = np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128)
    if mode == "pure":
        return PureState(amplitudes=amplitudes, num_qubits=num_qubits)
    if mode == "mixed":
        rho = np.full((dim, dim), 1.0 / dim, dtype=np.complex128)
        return MixedState(rho=rho, num_qubits=num_qubits)
    raise ConfigurationError(f"unknown simulation mode {mode!r}")


def basis_state(num_qubits: int, index: int, mode: SimulationMode = "pure") -> QuantumState:
    """Computational basis state |index>, mostly useful as a test fixture."""
    num_qubits = check_num_qubits(num_qubits)
    dim = 1 << num_qubits
    if not 0 <= index < dim:
        raise ConfigurationError(f"basis index {index} out of range for {num_qubits} qubits")
    amplitudes = np.zeros(dim, dtype=np.complex128)
    amplitudes[index] = 1.0
    pure = PureState(amplitudes=amplitudes, num_qubits=num_qubits)
    if mode == "pure":
        return pure
    return MixedState(rho=pure.density_matrix(), num_qubits=num_qubits)


def probabilities(state: QuantumState) -> FloatArray:
    """Computational-basis populations."""
    if isinstance(state, PureState):
        return np.abs(state.amplitudes) ** 2
    return np.real(np.diagonal(state.rho)).copy()


def expect_z(state: QuantumState, qubit: int) -> float:
    """<Z_qubit>, exact."""
    check_qubit(state, qubit)
    value = float(z_signs(state.num_qubits)[qubit] @ probabilities(state))
    return min(1.0, max(-1.0, value))


def expect_zz(state: QuantumState, qubit_i: int, qubit_j: int) -> float:
    """<Z_i Z_j>, exact."""
    check_qubit_pair(state, qubit_i, qubit_j)
    signs = z_signs(state.num_qubits)
    value = float((signs[qubit_i] * signs[qubit_j]) @ probabilities(state))
    return min(1.0, max(-1.0, value))


def purity(state: QuantumState) -> float:
    """Tr(rho^2). Always 1 for a pure state."""
    if isinstance(state, PureState):
        return 1.0
    # Tr(rho^2) = sum |rho_xy|^2 for Hermitian rho
    return float(np.sum(np.abs(state.rho) ** 2))


def check_physical(state: QuantumState, atol: float = 1e-12, psd_atol: float = 1e-10) -> None:
    """Raise `DataError` unless the state satisfies its normalization invariants.

    Pure states must have unit norm. Mixed states must have unit trace, be Hermitian and have no
    eigenvalue below `-psd_atol`.
    """
    if isinstance(state, PureState):
        if state.amplitudes.shape != (state.dimension,):
            raise DataError(f"statevector has shape {state.amplitudes.shape}")
        norm = float(np.linalg.norm(state.amplitudes))
        if abs(norm - 1.0) > atol:
            raise DataError(f"statevector norm {norm!r} deviates from 1")
        return

    rho = state.rho
    if rho.shape != (state.dimension, state.dimension):
        raise DataError(f"density matrix has shape {rho.shape}")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > atol:
        raise DataError(f"density matrix trace {trace!r} deviates from 1")
    asymmetry = float(np.max(np.abs(rho - rho.conj().T)))
    if asymmetry > atol:
        raise DataError(f"density matrix is not Hermitian (max deviation {asymmetry:.3e})")
    smallest = float(np.linalg.eigvalsh(rho)[0])
    if smallest < -psd_atol:
        raise DataError(f"density matrix has negative eigenvalue {smallest:.3e}")
