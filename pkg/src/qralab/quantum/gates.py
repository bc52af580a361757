"""Unitary gates: axis rotations, CNOT and the RZZ entangler."""

from __future__ import annotations

import math
from typing import Literal

import numpy as np

from ..exceptions import ConfigurationError, DataError
from ._kernels import (
    ComplexArray,
    apply_matrix_to_vector,
    apply_superoperator_to_matrix,
    basis_bits,
    cnot_permutation,
    unitary_superoperator,
)
from .state import MixedState, PureState, QuantumState, check_qubit, check_qubit_pair

Axis = Literal["X", "Y", "Z"]


def check_angle(angle: float) -> float:
    value = float(angle)
    if not math.isfinite(value):
        raise DataError(f"gate angle must be finite, got {angle!r}")
    return value


def rotation_matrix(axis: Axis, angle: float) -> ComplexArray:
    """R_axis(angle) = exp(-i * angle * sigma_axis / 2)."""
    angle = check_angle(angle)
    c, s = math.cos(angle / 2.0), math.sin(angle / 2.0)
    if axis == "X":
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)
    if axis == "Y":
        return np.array([[c, -s], [s, c]], dtype=np.complex128)
    if axis == "Z":
        return np.array([[c - 1j * s, 0.0], [0.0, c + 1j * s]], dtype=np.complex128)
    raise ConfigurationError(f"unknown rotation axis {axis!r}")


def apply_single_qubit_unitary(
    state: QuantumState, qubit: int, matrix: ComplexArray
) -> QuantumState:
    check_qubit(state, qubit)
    if isinstance(state, PureState):
        state.amplitudes = apply_matrix_to_vector(
            state.amplitudes, state.num_qubits, qubit, matrix
        )
    else:
        state.rho = apply_superoperator_to_matrix(
            state.rho, state.num_qubits, qubit, unitary_superoperator(matrix)
        )
    return state


def _apply_z_phase(state: QuantumState, qubit: int, angle: float) -> QuantumState:
    # RZ is diagonal: scale each basis amplitude by exp(-+i angle/2) instead of a matmul.
    bits = basis_bits(state.num_qubits)[qubit]
    phases = np.exp(-0.5j * angle * (1.0 - 2.0 * bits))
    if isinstance(state, PureState):
        state.amplitudes = state.amplitudes * phases
    else:
        state.rho = state.rho * np.outer(phases, phases.conj())
    return state


def apply_single_qubit_rotation(
    state: QuantumState, qubit: int, axis: Axis, angle: float
) -> QuantumState:
    """Apply R_axis(angle) to `qubit` in place and return the state.

    Raises:
        QubitIndexError: If `qubit` is out of range.
        DataError: If `angle` is not finite.
    """
    check_qubit(state, qubit)
    if axis == "Z":
        return _apply_z_phase(state, qubit, check_angle(angle))
    return apply_single_qubit_unitary(state, qubit, rotation_matrix(axis, angle))


def apply_cnot(state: QuantumState, control: int, target: int) -> QuantumState:
    """Flip `target` where `control` is set. A basis permutation, applied by fancy indexing."""
    check_qubit_pair(state, control, target)
    perm = cnot_permutation(state.num_qubits, control, target)
    if isinstance(state, PureState):
        state.amplitudes = state.amplitudes[perm]
    else:
        assert isinstance(state, MixedState)
        state.rho = state.rho[np.ix_(perm, perm)]
    return state


def apply_rzz(state: QuantumState, qubit_i: int, qubit_j: int, angle: float) -> QuantumState:
    """exp(-i * angle * Z_i Z_j / 2) as CNOT_ij RZ_j(angle) CNOT_ij."""
    check_qubit_pair(state, qubit_i, qubit_j)
    angle = check_angle(angle)
    apply_cnot(state, qubit_i, qubit_j)
    _apply_z_phase(state, qubit_j, angle)
    apply_cnot(state, qubit_i, qubit_j)
    return state
