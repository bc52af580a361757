import numpy as np
import pytest

from qralab.exceptions import ConfigurationError, ModeError
from qralab.harness.validation import random_density_matrix
from qralab.quantum import (
    MixedState,
    apply_reset_channel,
    apply_single_qubit_channel,
    basis_state,
    check_physical,
    expect_z,
    gate_then_reset_superoperator,
    init_plus,
    kraus_completeness,
    kraus_superoperator,
    reset_kraus_operators,
    reset_superoperator,
    rotation_matrix,
)
from qralab.quantum._kernels import apply_superoperator_to_matrix, unitary_superoperator


def reset_oracle(rho: np.ndarray, num_qubits: int, qubit: int, p: float) -> np.ndarray:
    """(1 - p) rho + p |0><0|_q (x) Tr_q(rho), evaluated directly."""
    left, right = 1 << (num_qubits - 1 - qubit), 1 << qubit
    view = rho.reshape(left, 2, right, left, 2, right)
    reduced = view[:, 0, :, :, 0, :] + view[:, 1, :, :, 1, :]
    reset = np.zeros_like(view)
    reset[:, 0, :, :, 0, :] = reduced
    dim = 1 << num_qubits
    return (1 - p) * rho + p * reset.reshape(dim, dim)


@pytest.mark.parametrize("p", np.linspace(0.0, 1.0, 11))
def test_kraus_completeness(p):
    assert kraus_completeness(reset_kraus_operators(p)) < 1e-15


@pytest.mark.parametrize("p", [-0.1, 1.5, float("nan")])
def test_reset_rejects_bad_probability(p):
    with pytest.raises(ConfigurationError):
        reset_kraus_operators(p)
    with pytest.raises(ConfigurationError):
        apply_reset_channel(init_plus(1, mode="mixed"), 0, p)


def test_reset_on_pure_state_is_mode_error():
    with pytest.raises(ModeError):
        apply_reset_channel(init_plus(2), 0, 0.5)
    with pytest.raises(ModeError):
        apply_single_qubit_channel(init_plus(2), 0, reset_superoperator(0.5))


def test_zero_probability_leaves_state_unchanged(rng):
    state = random_density_matrix(2, rng)
    before = state.rho.copy()
    apply_reset_channel(state, 1, 0.0)
    np.testing.assert_allclose(state.rho, before, atol=1e-15)


def test_full_reset_gives_ground_state(rng):
    state = random_density_matrix(1, rng)
    apply_reset_channel(state, 0, 1.0)
    np.testing.assert_allclose(state.rho, [[1, 0], [0, 0]], atol=1e-15)


def test_half_reset_of_excited_state():
    state = basis_state(1, 1, mode="mixed")
    assert isinstance(state, MixedState)
    apply_reset_channel(state, 0, 0.5)
    np.testing.assert_allclose(state.rho, np.diag([0.5, 0.5]), atol=1e-15)


@pytest.mark.parametrize("qubit", [0, 1, 2])
@pytest.mark.parametrize("p", [0.2, 0.75])
def test_reset_matches_direct_formula(rng, qubit, p):
    state = random_density_matrix(3, rng)
    expected = reset_oracle(state.rho, 3, qubit, p)
    apply_reset_channel(state, qubit, p)
    np.testing.assert_allclose(state.rho, expected, atol=1e-14)


def test_reset_preserves_physicality(rng):
    state = random_density_matrix(3, rng)
    for qubit, p in [(0, 0.3), (2, 0.9), (1, 0.01), (0, 1.0)]:
        apply_reset_channel(state, qubit, p)
        check_physical(state)


def test_reset_contracts_towards_zero():
    # <Z> after the channel is (1 - p) <Z> + p
    state = init_plus(2, mode="mixed")
    apply_reset_channel(state, 0, 0.4)
    assert expect_z(state, 0) == pytest.approx(0.4)
    assert expect_z(state, 1) == pytest.approx(0.0, abs=1e-15)


def test_fused_gate_and_reset_equals_sequential(rng):
    u = rotation_matrix("Y", 0.63)
    fused = random_density_matrix(2, rng)
    sequential = fused.copy()
    apply_single_qubit_channel(fused, 1, gate_then_reset_superoperator(u, 0.35))
    sequential.rho = apply_superoperator_to_matrix(
        sequential.rho, 2, 1, unitary_superoperator(u)
    )
    apply_reset_channel(sequential, 1, 0.35)
    np.testing.assert_allclose(fused.rho, sequential.rho, atol=1e-14)


def test_superoperator_of_identity_kraus_is_identity():
    np.testing.assert_allclose(kraus_superoperator([np.eye(2, dtype=complex)]), np.eye(4))
