"""Binomial shot-noise readout and the per-reservoir feature sampler."""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt

from ..exceptions import ConfigurationError, DataError
from .circuit import FeatureMatrix, run_sequence
from .config import ReservoirConfig
from .noise import NoiseProfile

# Set up logger
logger = logging.getLogger("qralab.reservoir.shots")

RANGE_TOLERANCE = 1e-9


def _observables(features: npt.ArrayLike) -> FeatureMatrix:
    matrix = np.array(features, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[1] < 2:
        raise DataError(f"feature matrix must be 2-D with a bias column, got {matrix.shape}")
    excess = float(np.max(np.abs(matrix[:, :-1]))) - 1.0 if matrix.size else 0.0
    if excess > RANGE_TOLERANCE:
        raise DataError(f"expectation value out of [-1, 1] by {excess:.3e}")
    if excess > 0.0:
        logger.warning("clamping expectation values exceeding [-1, 1] by %.3e", excess)
    matrix[:, :-1] = np.clip(matrix[:, :-1], -1.0, 1.0)
    return matrix


def apply_shot_noise(
    features: npt.ArrayLike, n_shots: int, rng: np.random.Generator
) -> FeatureMatrix:
    """Replace each measured expectation value by a finite-shot estimate.

    Each entry <O> becomes 2 n / N - 1 with n ~ Binomial(N, (1 + <O>) / 2). The bias column is
    left untouched.

    Raises:
        ConfigurationError: If `n_shots` < 1.
        DataError: If an entry lies outside [-1, 1] by more than 1e-9.
    """
    if n_shots < 1:
        raise ConfigurationError(f"n_shots must be positive, got {n_shots}")
    matrix = _observables(features)
    p_meas = 0.5 * (1.0 + matrix[:, :-1])
    counts = rng.binomial(n_shots, p_meas)
    matrix[:, :-1] = 2.0 * counts / n_shots - 1.0
    return matrix


def predicted_shot_variance(features: npt.ArrayLike, n_shots: int) -> FeatureMatrix:
    """Variance (1 - <O>^2) / N of each shot-noise estimate; 0 for the bias column."""
    if n_shots < 1:
        raise ConfigurationError(f"n_shots must be positive, got {n_shots}")
    matrix = _observables(features)
    variance = np.zeros_like(matrix)
    variance[:, :-1] = (1.0 - matrix[:, :-1] ** 2) / n_shots
    return variance


class FeatureSampler:
    """Produces measurement records of one reservoir's feature matrix.

    Exact features are deterministic given the input, so they are memoised. With shots
    configured, a `"fresh"` reservoir draws a new record on every call and a `"per_sequence"`
    reservoir memoises the first record drawn for each input sequence.
    """

    MAX_CACHE_ENTRIES = 4096

    def __init__(
        self,
        profile: NoiseProfile,
        config: ReservoirConfig,
        rng: np.random.Generator | None = None,
    ):
        if config.shots is not None and rng is None:
            raise ConfigurationError("a shot-noise reservoir needs a random generator")
        if profile.num_qubits != config.num_qubits:
            raise ConfigurationError(
                f"profile has {profile.num_qubits} qubits, config has {config.num_qubits}"
            )
        self.profile = profile
        self.config = config
        self.rng = rng
        self._cache: dict[tuple[int, bytes], FeatureMatrix] = {}
        self._records: dict[tuple[int, bytes], FeatureMatrix] = {}
        self.evaluations = 0

    @property
    def noisy(self) -> bool:
        return self.config.shots is not None

    @property
    def feature_dimension(self) -> int:
        return self.config.feature_dimension

    @staticmethod
    def _key(inputs: npt.ArrayLike) -> tuple[int, bytes]:
        sequence = np.ascontiguousarray(inputs, dtype=np.float64)
        return sequence.size, sequence.tobytes()

    def _remember(
        self,
        store: dict[tuple[int, bytes], FeatureMatrix],
        key: tuple[int, bytes],
        value: FeatureMatrix,
    ) -> FeatureMatrix:
        value.setflags(write=False)
        if len(store) >= self.MAX_CACHE_ENTRIES:
            store.clear()
        store[key] = value
        return value

    def exact(self, inputs: npt.ArrayLike) -> FeatureMatrix:
        """Exact expectation values. The returned array is read-only."""
        key = self._key(inputs)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        features = run_sequence(np.asarray(inputs, dtype=np.float64), self.profile, self.config)
        self.evaluations += 1
        return self._remember(self._cache, key, features)

    def measure(self, inputs: npt.ArrayLike) -> FeatureMatrix:
        """One measurement record: the exact features, or a shot-noise draw of them."""
        exact = self.exact(inputs)
        if self.config.shots is None:
            return exact
        assert self.rng is not None
        if self.config.shot_record == "fresh":
            return apply_shot_noise(exact, self.config.shots, self.rng)

        key = self._key(inputs)
        record = self._records.get(key)
        if record is None:
            record = self._remember(
                self._records, key, apply_shot_noise(exact, self.config.shots, self.rng)
            )
        return record

    __call__ = measure
