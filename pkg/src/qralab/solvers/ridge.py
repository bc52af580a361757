"""Tikhonov-regularized least squares readout."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt
import scipy.linalg

from ..exceptions import ConfigurationError, DataError
from ..reservoir import FeatureSampler, NoiseProfile, ReservoirConfig

# Set up logger
logger = logging.getLogger("qralab.solvers.ridge")

FloatArray = npt.NDArray[np.float64]
SolveMethod = Literal["primal", "dual", "svd", "lstsq"]


@dataclass(frozen=True, eq=False)
class ReadoutWeights:
    """A solved readout. `w` has shape (D,) for vector targets and (D, T) for matrix targets."""

    w: FloatArray
    regularization: float
    method: SolveMethod

    @property
    def feature_dimension(self) -> int:
        return int(self.w.shape[0])

    def predict(self, features: npt.ArrayLike) -> FloatArray:
        matrix = np.asarray(features, dtype=np.float64)
        if matrix.shape[-1] != self.feature_dimension:
            raise DataError(
                f"weights expect {self.feature_dimension} features, got {matrix.shape[-1]}"
            )
        return matrix @ self.w


def _check_system(features: npt.ArrayLike, targets: npt.ArrayLike) -> tuple[FloatArray, FloatArray]:
    v = np.asarray(features, dtype=np.float64)
    y = np.asarray(targets, dtype=np.float64)
    if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
        raise DataError(f"feature matrix must be 2-D and non-empty, got shape {v.shape}")
    if y.ndim not in (1, 2) or y.shape[0] != v.shape[0]:
        raise DataError(f"targets of shape {y.shape} do not match features of shape {v.shape}")
    if not (np.all(np.isfinite(v)) and np.all(np.isfinite(y))):
        raise DataError("ridge system contains non-finite values")
    return v, y


def _svd_ridge(v: FloatArray, y: FloatArray, regularization: float) -> FloatArray:
    u, s, vt = scipy.linalg.svd(v, full_matrices=False)
    filtered = s / (s**2 + regularization)
    rotated = u.T @ y
    if rotated.ndim == 1:
        return vt.T @ (filtered * rotated)
    return vt.T @ (filtered[:, None] * rotated)


def ridge_solve(
    features: npt.ArrayLike, targets: npt.ArrayLike, regularization: float
) -> ReadoutWeights:
    """Solve W = argmin ||V W - y||^2 + lambda ||W||^2.

    The normal equations are formed in whichever Gram form is smaller: (V^T V + lambda I) when
    Nc >= D, and the equivalent V^T (V V^T + lambda I)^-1 y when Nc < D. Both are Cholesky
    factored; if factorization fails the solve falls back to a filtered SVD. With
    `regularization == 0` the minimum-norm least-squares solution is returned.

    Args:
        features: Feature matrix V of shape (Nc, D).
        targets: Targets y of shape (Nc,) or (Nc, T).
        regularization: lambda >= 0.

    Returns:
        The solved weights.

    Raises:
        ConfigurationError: If `regularization` is negative or not finite.
        DataError: If the shapes disagree or the system is not finite.
    """
    if not math.isfinite(regularization) or regularization < 0.0:
        raise ConfigurationError(f"regularization must be >= 0, got {regularization!r}")
    v, y = _check_system(features, targets)
    n, d = v.shape

    if regularization == 0.0:
        w, *_ = scipy.linalg.lstsq(v, y)
        return ReadoutWeights(w=np.asarray(w, dtype=np.float64), regularization=0.0, method="lstsq")

    try:
        if n >= d:
            gram = v.T @ v
            gram[np.diag_indices(d)] += regularization
            w = scipy.linalg.cho_solve(scipy.linalg.cho_factor(gram), v.T @ y)
            method: SolveMethod = "primal"
        else:
            gram = v @ v.T
            gram[np.diag_indices(n)] += regularization
            w = v.T @ scipy.linalg.cho_solve(scipy.linalg.cho_factor(gram), y)
            method = "dual"
        if np.all(np.isfinite(w)):
            return ReadoutWeights(w=w, regularization=regularization, method=method)
        logger.warning("Cholesky ridge solve produced non-finite weights; using SVD")
    except np.linalg.LinAlgError:
        logger.warning("Cholesky factorization failed for a %sx%s system; using SVD", n, d)
    return ReadoutWeights(
        w=_svd_ridge(v, y, regularization), regularization=regularization, method="svd"
    )


def ridge_objective(
    features: npt.ArrayLike, targets: npt.ArrayLike, w: npt.ArrayLike, regularization: float
) -> float:
    """||V W - y||^2 + lambda ||W||^2."""
    v, y = _check_system(features, targets)
    weights = np.asarray(w, dtype=np.float64)
    residual = v @ weights - y
    return float(np.sum(residual**2) + regularization * np.sum(weights**2))


def project(
    sampler: FeatureSampler,
    inputs: npt.ArrayLike,
    targets: npt.ArrayLike,
    regularization: float,
) -> tuple[FloatArray, ReadoutWeights]:
    """R(x) = V(x) W on one measurement record of V, with W solved against `targets`."""
    v = sampler.measure(inputs)
    weights = ridge_solve(v, targets, regularization)
    return weights.predict(v), weights


def reservoir_project(
    inputs: npt.ArrayLike,
    profile: NoiseProfile,
    config: ReservoirConfig,
    targets: npt.ArrayLike,
    regularization: float,
    rng: np.random.Generator | None = None,
) -> tuple[FloatArray, ReadoutWeights]:
    """Run the reservoir over `inputs`, fit a readout to `targets` and return V W.

    `rng` is required when `config.shots` is set.
    """
    return project(FeatureSampler(profile, config, rng), inputs, targets, regularization)
