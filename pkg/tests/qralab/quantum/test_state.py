import math

import numpy as np
import pytest

from qralab.exceptions import ConfigurationError, DataError, QubitIndexError
from qralab.quantum import (
    MAX_QUBITS,
    MixedState,
    PureState,
    basis_state,
    check_physical,
    expect_z,
    expect_zz,
    init_plus,
    probabilities,
    purity,
)


class TestInitPlus:
    """Tests for preparing |+>^Nq"""

    def test_single_qubit_amplitudes(self):
        state = init_plus(1)
        assert isinstance(state, PureState)
        np.testing.assert_allclose(state.amplitudes, [1 / math.sqrt(2), 1 / math.sqrt(2)])

    def test_two_qubit_amplitudes(self):
        state = init_plus(2)
        np.testing.assert_allclose(state.amplitudes, [0.5, 0.5, 0.5, 0.5])

    def test_mixed_mode_is_uniform_density_matrix(self):
        state = init_plus(1, mode="mixed")
        assert isinstance(state, MixedState)
        np.testing.assert_allclose(state.rho, np.full((2, 2), 0.5))

    def test_mixed_matches_outer_product_of_pure(self):
        pure = init_plus(3)
        mixed = init_plus(3, mode="mixed")
        np.testing.assert_allclose(mixed.rho, pure.density_matrix(), atol=1e-15)

    @pytest.mark.parametrize("num_qubits", [0, -1, MAX_QUBITS + 1])
    def test_out_of_range_qubit_count(self, num_qubits):
        with pytest.raises(ConfigurationError):
            init_plus(num_qubits)

    def test_non_integer_qubit_count(self):
        with pytest.raises(ConfigurationError):
            init_plus(2.0)  # type: ignore[arg-type]

    def test_unknown_mode(self):
        with pytest.raises(ConfigurationError):
            init_plus(2, mode="stabilizer")  # type: ignore[arg-type]

    def test_copy_is_independent(self):
        state = init_plus(2)
        clone = state.copy()
        clone.amplitudes[0] = 0.0
        assert state.amplitudes[0] == pytest.approx(0.5)


def test_basis_state_z_expectation():
    assert expect_z(basis_state(1, 0), 0) == 1.0
    assert expect_z(basis_state(1, 1), 0) == -1.0


def test_qubit_zero_is_least_significant_bit():
    # |index=1> has qubit 0 set and qubit 1 clear
    state = basis_state(2, 1)
    assert expect_z(state, 0) == -1.0
    assert expect_z(state, 1) == 1.0
    assert expect_zz(state, 0, 1) == -1.0


@pytest.mark.parametrize("mode", ["pure", "mixed"])
def test_plus_state_has_zero_z_observables(mode):
    state = init_plus(4, mode=mode)
    for i in range(4):
        assert expect_z(state, i) == pytest.approx(0.0, abs=1e-15)
        for j in range(i + 1, 4):
            assert expect_zz(state, i, j) == pytest.approx(0.0, abs=1e-15)


def test_expect_z_rejects_bad_qubit():
    with pytest.raises(QubitIndexError):
        expect_z(init_plus(2), 2)
    with pytest.raises(IndexError):
        expect_z(init_plus(2), -1)


def test_expect_zz_rejects_repeated_qubit():
    with pytest.raises(QubitIndexError):
        expect_zz(init_plus(2), 1, 1)


def test_probabilities_sum_to_one():
    for mode in ("pure", "mixed"):
        assert probabilities(init_plus(3, mode=mode)).sum() == pytest.approx(1.0)


def test_purity():
    assert purity(init_plus(2)) == 1.0
    assert purity(init_plus(2, mode="mixed")) == pytest.approx(1.0)
    maximally_mixed = MixedState(rho=np.eye(4, dtype=np.complex128) / 4, num_qubits=2)
    assert purity(maximally_mixed) == pytest.approx(0.25)


class TestCheckPhysical:
    """Tests for the normalization invariants"""

    def test_valid_states_pass(self):
        check_physical(init_plus(3))
        check_physical(init_plus(3, mode="mixed"))

    def test_unnormalized_vector(self):
        state = init_plus(2)
        state.amplitudes = state.amplitudes * 1.1
        with pytest.raises(DataError):
            check_physical(state)

    def test_wrong_trace(self):
        state = init_plus(2, mode="mixed")
        state.rho = state.rho * 2
        with pytest.raises(DataError):
            check_physical(state)

    def test_non_hermitian(self):
        state = init_plus(1, mode="mixed")
        state.rho[0, 1] = 0.5j
        with pytest.raises(DataError):
            check_physical(state)

    def test_negative_eigenvalue(self):
        rho = np.array([[1.5, 0.0], [0.0, -0.5]], dtype=np.complex128)
        with pytest.raises(DataError):
            check_physical(MixedState(rho=rho, num_qubits=1))
