import logging

import numpy as np
import pytest

from qralab.codec import encode_f, generate_key, generate_plaintext
from qralab.exceptions import ConfigurationError, DataError
from qralab.reservoir import ReservoirConfig, sample_noise_profile
from qralab.solvers import ReadoutWeights, reservoir_project, ridge_objective, ridge_solve


def normal_equation_oracle(v: np.ndarray, y: np.ndarray, lam: float) -> np.ndarray:
    return np.linalg.solve(v.T @ v + lam * np.eye(v.shape[1]), v.T @ y)


def test_identity_features_without_regularization():
    y = np.array([0.3, -0.1, 0.8])
    weights = ridge_solve(np.eye(3), y, 0.0)
    assert weights.method == "lstsq"
    np.testing.assert_allclose(weights.w, y, atol=1e-15)


def test_small_system_against_closed_form():
    v = np.array([[1.0, 2.0], [0.5, -1.0], [3.0, 0.25]])
    y = np.array([1.0, 0.0, -2.0])
    weights = ridge_solve(v, y, 0.1)
    assert weights.method == "primal"
    np.testing.assert_allclose(weights.w, normal_equation_oracle(v, y, 0.1), atol=1e-12)


def test_wide_system_uses_dual_form(rng):
    v = rng.normal(size=(10, 56))
    y = rng.normal(size=10)
    weights = ridge_solve(v, y, 1e-3)
    assert weights.method == "dual"
    np.testing.assert_allclose(weights.w, normal_equation_oracle(v, y, 1e-3), atol=1e-9)


def test_projection_exact_when_features_exceed_length(rng):
    v = rng.uniform(-1, 1, size=(10, 56))
    y = rng.uniform(-1, 1, size=10)
    weights = ridge_solve(v, y, 1e-12)
    assert np.max(np.abs(weights.predict(v) - y)) < 1e-10


def test_rank_deficient_projection_leaves_residual(rng):
    v = rng.normal(size=(20, 5))
    y = rng.normal(size=20)
    weights = ridge_solve(v, y, 1e-10)
    assert np.linalg.norm(weights.predict(v) - y) > 1e-3


def test_singular_system_without_regularization_is_minimum_norm():
    v = np.array([[1.0, 1.0], [1.0, 1.0]])
    weights = ridge_solve(v, np.array([2.0, 2.0]), 0.0)
    np.testing.assert_allclose(weights.w, [1.0, 1.0], atol=1e-12)


def test_solution_minimises_objective(rng):
    v = rng.normal(size=(15, 6))
    y = rng.normal(size=15)
    lam = 0.05
    w = ridge_solve(v, y, lam).w
    best = ridge_objective(v, y, w, lam)
    for _ in range(20):
        perturbed = w + 1e-3 * rng.normal(size=w.shape)
        assert ridge_objective(v, y, perturbed, lam) >= best


def test_matrix_targets(rng):
    v = rng.normal(size=(12, 4))
    y = rng.normal(size=(12, 3))
    weights = ridge_solve(v, y, 0.01)
    assert weights.w.shape == (4, 3)
    np.testing.assert_allclose(weights.w[:, 1], ridge_solve(v, y[:, 1], 0.01).w, atol=1e-12)


def test_cholesky_failure_falls_back_to_svd(rng, mocker, caplog):
    mocker.patch(
        "scipy.linalg.cho_factor",
        side_effect=np.linalg.LinAlgError("not positive definite"),
    )
    v = rng.normal(size=(8, 3))
    y = rng.normal(size=8)
    with caplog.at_level(logging.WARNING, logger="qralab.solvers.ridge"):
        weights = ridge_solve(v, y, 0.2)
    assert weights.method == "svd"
    assert "using SVD" in caplog.text
    np.testing.assert_allclose(weights.w, normal_equation_oracle(v, y, 0.2), atol=1e-10)


class TestRidgeErrors:
    """Tests for malformed ridge systems"""

    def test_negative_regularization(self):
        with pytest.raises(ConfigurationError):
            ridge_solve(np.eye(2), np.ones(2), -1.0)

    def test_shape_mismatch(self):
        with pytest.raises(DataError):
            ridge_solve(np.eye(3), np.ones(2), 1e-6)

    def test_non_finite_values(self):
        v = np.eye(2)
        v[0, 1] = np.nan
        with pytest.raises(DataError):
            ridge_solve(v, np.ones(2), 1e-6)

    def test_predict_dimension_mismatch(self):
        weights = ReadoutWeights(w=np.ones(3), regularization=0.0, method="lstsq")
        with pytest.raises(DataError):
            weights.predict(np.ones((2, 4)))


def test_reservoir_projection_reproduces_encoded_input(rng):
    nq, nc = 6, 5
    profile = sample_noise_profile(nq, rng)
    encoded = encode_f(generate_key(nc, nq, rng), generate_plaintext(nc, rng))
    projected, weights = reservoir_project(
        encoded, profile, ReservoirConfig(num_qubits=nq), encoded, 1e-12
    )
    assert weights.method == "dual"
    assert np.max(np.abs(projected - encoded)) < 1e-8


def test_reservoir_projection_below_rank_condition(rng):
    nq, nc = 2, 12
    profile = sample_noise_profile(nq, rng)
    encoded = encode_f(generate_key(nc, nq, rng), generate_plaintext(nc, rng))
    projected, _ = reservoir_project(
        encoded, profile, ReservoirConfig(num_qubits=nq), encoded, 1e-10
    )
    assert np.mean((projected - encoded) ** 2) > 1e-8
