import pytest

from qralab.exceptions import ConfigurationError
from qralab.protocols import (
    RANDOM_BASELINE_MSE,
    compute_d_aug,
    minimum_qubits,
    rank_condition_holds,
)


@pytest.mark.parametrize(("nq", "k", "expected"), [(5, 7, 23), (7, 7, 36), (10, 7, 63), (4, 0, 11)])
def test_compute_d_aug(nq, k, expected):
    assert compute_d_aug(nq, k) == expected


def test_compute_d_aug_rejects_bad_arguments():
    with pytest.raises(ConfigurationError):
        compute_d_aug(0, 7)
    with pytest.raises(ConfigurationError):
        compute_d_aug(5, -1)


def test_rank_condition():
    assert rank_condition_holds(5, 16)
    assert not rank_condition_holds(5, 17)
    assert rank_condition_holds(10, 35)


@pytest.mark.parametrize(("nc", "expected"), [(5, 4), (20, 7), (35, 9), (50, 10), (1, 2)])
def test_minimum_qubits(nc, expected):
    assert minimum_qubits(nc) == expected


def test_minimum_qubits_rejects_empty_plaintext():
    with pytest.raises(ConfigurationError):
        minimum_qubits(0)


def test_random_baseline():
    # E[C^2] for C ~ Uniform(-1, 1)
    assert RANDOM_BASELINE_MSE == pytest.approx(1 / 3)
