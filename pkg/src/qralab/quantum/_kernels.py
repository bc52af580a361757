"""Dense numpy kernels shared by the gate and channel modules.

Qubit 0 is the least-significant bit of the basis index. A statevector of `n` qubits is viewed as
an array of shape `(2**(n-1-q), 2, 2**q)` when acting on qubit `q`, which puts the target bit on
the middle axis without copying.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import numpy.typing as npt

ComplexArray = npt.NDArray[np.complex128]
FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]


@lru_cache(maxsize=32)
def basis_bits(num_qubits: int) -> IntArray:
    """Bit table of shape (num_qubits, 2**num_qubits): entry [q, x] is bit q of index x."""
    index = np.arange(1 << num_qubits, dtype=np.int64)
    bits = (index[None, :] >> np.arange(num_qubits, dtype=np.int64)[:, None]) & 1
    bits.setflags(write=False)
    return bits


@lru_cache(maxsize=32)
def z_signs(num_qubits: int) -> FloatArray:
    """Eigenvalues of Z_q on every basis state, shape (num_qubits, 2**num_qubits)."""
    signs = 1.0 - 2.0 * basis_bits(num_qubits).astype(np.float64)
    signs.setflags(write=False)
    return signs


@lru_cache(maxsize=256)
def cnot_permutation(num_qubits: int, control: int, target: int) -> IntArray:
    index = np.arange(1 << num_qubits, dtype=np.int64)
    perm = index ^ (((index >> control) & 1) << target)
    perm.setflags(write=False)
    return perm


def _split(num_qubits: int, qubit: int) -> tuple[int, int]:
    return 1 << (num_qubits - 1 - qubit), 1 << qubit


def apply_matrix_to_vector(
    amplitudes: ComplexArray, num_qubits: int, qubit: int, matrix: ComplexArray
) -> ComplexArray:
    left, right = _split(num_qubits, qubit)
    psi = amplitudes.reshape(left, 2, right)
    return np.einsum("ab,ibj->iaj", matrix, psi).reshape(-1)


def apply_superoperator_to_matrix(
    rho: ComplexArray, num_qubits: int, qubit: int, superop: ComplexArray
) -> ComplexArray:
    """Apply a 4x4 single-qubit superoperator in the row-major `(ket, bra)` basis.

    The target ket and bra axes are moved to the front so the contraction is one matmul over a
    (4, dim**2 / 4) view.
    """
    dim = 1 << num_qubits
    left, right = _split(num_qubits, qubit)
    view = rho.reshape(left, 2, right, left, 2, right).transpose(1, 4, 0, 2, 3, 5)
    out = (superop @ view.reshape(4, -1)).reshape(2, 2, left, right, left, right)
    return np.ascontiguousarray(out.transpose(2, 0, 3, 4, 1, 5)).reshape(dim, dim)


def unitary_superoperator(matrix: ComplexArray) -> ComplexArray:
    return np.kron(matrix, matrix.conj())


def hermitize(rho: ComplexArray) -> ComplexArray:
    return 0.5 * (rho + rho.conj().T)
