"""The probabilistic reset channel rho -> (1 - p) rho + p |0><0| Tr_q(rho)."""

from __future__ import annotations

import math

import numpy as np

from ..exceptions import ConfigurationError, ModeError
from ._kernels import (
    ComplexArray,
    apply_superoperator_to_matrix,
    hermitize,
    unitary_superoperator,
)
from .state import MixedState, QuantumState, check_qubit


def check_probability(p: float) -> float:
    value = float(p)
    if not math.isfinite(value) or not 0.0 <= value <= 1.0:
        raise ConfigurationError(f"reset probability must be in [0, 1], got {p!r}")
    return value


def reset_kraus_operators(p: float) -> tuple[ComplexArray, ComplexArray, ComplexArray]:
    """K0 = sqrt(1-p) I, K1 = sqrt(p) |0><0|, K2 = sqrt(p) |0><1|."""
    p = check_probability(p)
    k0 = math.sqrt(1.0 - p) * np.eye(2, dtype=np.complex128)
    k1 = math.sqrt(p) * np.array([[1.0, 0.0], [0.0, 0.0]], dtype=np.complex128)
    k2 = math.sqrt(p) * np.array([[0.0, 1.0], [0.0, 0.0]], dtype=np.complex128)
    return k0, k1, k2


def kraus_completeness(operators: tuple[ComplexArray, ...] | list[ComplexArray]) -> float:
    """Max-norm deviation of sum_k K_k^dagger K_k from the identity."""
    total = sum((k.conj().T @ k for k in operators), np.zeros((2, 2), dtype=np.complex128))
    return float(np.max(np.abs(total - np.eye(2))))


def kraus_superoperator(operators: tuple[ComplexArray, ...] | list[ComplexArray]) -> ComplexArray:
    """4x4 superoperator sum_k K_k (x) conj(K_k) acting on row-major vec(rho)."""
    return sum((np.kron(k, k.conj()) for k in operators), np.zeros((4, 4), dtype=np.complex128))


def reset_superoperator(p: float) -> ComplexArray:
    return kraus_superoperator(reset_kraus_operators(p))


def gate_then_reset_superoperator(matrix: ComplexArray, p: float) -> ComplexArray:
    """Fuse a single-qubit unitary followed by a reset channel on the same qubit."""
    return reset_superoperator(p) @ unitary_superoperator(matrix)


def apply_single_qubit_channel(
    state: QuantumState, qubit: int, superop: ComplexArray
) -> MixedState:
    """Apply a 4x4 single-qubit superoperator to a density matrix and re-symmetrize."""
    if not isinstance(state, MixedState):
        raise ModeError("channels act on density matrices; simulate in mixed mode")
    check_qubit(state, qubit)
    state.rho = hermitize(
        apply_superoperator_to_matrix(state.rho, state.num_qubits, qubit, superop)
    )
    return state


def apply_reset_channel(state: QuantumState, qubit: int, p: float) -> MixedState:
    """Apply the reset channel with probability `p` to `qubit` in place.

    Raises:
        ConfigurationError: If `p` is outside [0, 1].
        ModeError: If `state` is a pure state.
        QubitIndexError: If `qubit` is out of range.
    """
    if not isinstance(state, MixedState):
        raise ModeError("the reset channel needs a density matrix; simulate in mixed mode")
    return apply_single_qubit_channel(state, qubit, reset_superoperator(p))
