"""Two-phase protocol: shared training on M plaintexts, then decryption with frozen weights.

Path 1 encrypts with key A at reservoir a and decrypts with secret beta at reservoir b. Path 2
uses B at reservoir b and alpha at reservoir a.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..codec import KeySet, decode_g, encode_f
from ..exceptions import ConfigurationError, DataError, DecoderStateError
from ..reservoir import FeatureSampler
from ..solvers import mse, project, ridge_solve

# Set up logger
logger = logging.getLogger("qralab.protocols.two_phase")

FloatArray = npt.NDArray[np.float64]
AugmentedFeatures = FloatArray
"""Nc x (D + K) array: reservoir features of the decoded sequence, then its powers 1..K."""

ENCRYPT_REGULARIZATION = 1e-10


@dataclass
class TwoPhaseConfig:
    """Settings shared by the two-phase protocol and its blind variant."""

    poly_degree: int = 7
    """Highest element-wise power K of the decoded sequence appended to the features."""

    regularization: float = 1e-6
    """Ridge lambda of the per-position decoders."""

    encrypt_regularization: float = ENCRYPT_REGULARIZATION
    """Ridge lambda of the per-plaintext encryption projection."""

    def __post_init__(self) -> None:
        if self.poly_degree < 0:
            raise ConfigurationError(f"poly_degree must be >= 0, got {self.poly_degree}")
        if self.regularization < 0 or self.encrypt_regularization < 0:
            raise ConfigurationError("regularization must be >= 0")


def augmented_features(
    decoded: npt.ArrayLike, sampler: FeatureSampler, poly_degree: int
) -> AugmentedFeatures:
    d = np.asarray(decoded, dtype=np.float64)
    powers = d[:, None] ** np.arange(1, poly_degree + 1)
    return np.hstack([sampler.measure(d), powers])


class PerPositionDecoder:
    """One weight vector per plaintext position, read-only once frozen."""

    def __init__(self, nc: int, d_aug: int):
        if nc < 1 or d_aug < 1:
            raise ConfigurationError(f"decoder needs nc >= 1 and d_aug >= 1, got {nc}, {d_aug}")
        self._weights = np.zeros((nc, d_aug), dtype=np.float64)
        self._frozen = False

    @property
    def nc(self) -> int:
        return int(self._weights.shape[0])

    @property
    def d_aug(self) -> int:
        return int(self._weights.shape[1])

    @property
    def frozen(self) -> bool:
        return self._frozen

    @property
    def weights(self) -> FloatArray:
        view = self._weights.view()
        view.setflags(write=False)
        return view

    def set_position(self, position: int, w: npt.ArrayLike) -> None:
        if self._frozen:
            raise DecoderStateError("decoder is frozen")
        self._weights[position] = np.asarray(w, dtype=np.float64)

    def freeze(self) -> PerPositionDecoder:
        self._frozen = True
        self._weights.setflags(write=False)
        return self

    def predict(self, features: AugmentedFeatures) -> FloatArray:
        if not self._frozen:
            raise DecoderStateError("decoder must be frozen before decrypting")
        if features.shape != self._weights.shape:
            raise DataError(
                f"augmented features of shape {features.shape} do not match decoder "
                f"{self._weights.shape}"
            )
        return np.einsum("ij,ij->i", features, self._weights)


def encrypt(
    plaintext: npt.ArrayLike, key: npt.ArrayLike, sampler: FeatureSampler, regularization: float
) -> FloatArray:
    """gamma = V(F(k, C)) W with W solved on the same record to reproduce F(k, C)."""
    encoded = encode_f(key, plaintext)
    gamma, _ = project(sampler, encoded, encoded, regularization)
    return gamma


def _check_plaintexts(plaintexts: npt.ArrayLike) -> FloatArray:
    batch = np.asarray(plaintexts, dtype=np.float64)
    if batch.ndim != 2:
        raise DataError(f"plaintexts must be an (M, Nc) array, got shape {batch.shape}")
    if batch.shape[0] < 1:
        raise ConfigurationError("at least one training plaintext is required")
    return batch


def fit_per_position(
    features: npt.ArrayLike, targets: npt.ArrayLike, regularization: float
) -> PerPositionDecoder:
    """Solve one ridge problem per position over the M samples of an (M, Nc, D_aug) stack."""
    stack = np.asarray(features, dtype=np.float64)
    y = np.asarray(targets, dtype=np.float64)
    _, nc, d_aug = stack.shape
    decoder = PerPositionDecoder(nc, d_aug)
    for i in range(nc):
        decoder.set_position(i, ridge_solve(stack[:, i, :], y[:, i], regularization).w)
    return decoder.freeze()


def two_phase_train(
    training_plaintexts: npt.ArrayLike,
    key: npt.ArrayLike,
    secret: npt.ArrayLike,
    sender: FeatureSampler,
    receiver: FeatureSampler,
    config: TwoPhaseConfig | None = None,
) -> PerPositionDecoder:
    """Phase 1: encrypt M shared plaintexts and fit the per-position decoder to them.

    Args:
        training_plaintexts: (M, Nc) array known to both parties.
        key: Encryption key used by the sender.
        secret: Secret key used by the receiver.
        sender: Reservoir that encrypts.
        receiver: Reservoir that decrypts.
        config: Polynomial degree and regularization.

    Returns:
        The frozen decoder.

    Raises:
        ConfigurationError: If there are no training plaintexts.
    """
    config = config or TwoPhaseConfig()
    plaintexts = _check_plaintexts(training_plaintexts)
    stack = np.stack(
        [
            augmented_features(
                decode_g(secret, encrypt(c, key, sender, config.encrypt_regularization)),
                receiver,
                config.poly_degree,
            )
            for c in plaintexts
        ]
    )
    decoder = fit_per_position(stack, plaintexts, config.regularization)
    logger.debug(
        "trained per-position decoder on %s plaintexts (Nc=%s, D_aug=%s)",
        plaintexts.shape[0],
        decoder.nc,
        decoder.d_aug,
    )
    return decoder


def two_phase_decrypt(
    ciphertext: npt.ArrayLike,
    secret: npt.ArrayLike,
    decoder: PerPositionDecoder,
    receiver: FeatureSampler,
    poly_degree: int,
) -> FloatArray:
    """Phase 2: recover a plaintext from its ciphertext with the frozen decoder.

    Raises:
        DecoderStateError: If `decoder` is not frozen.
    """
    if not decoder.frozen:
        raise DecoderStateError("decoder must be frozen before decrypting")
    gamma = np.asarray(ciphertext, dtype=np.float64)
    if gamma.shape != (decoder.nc,):
        raise DataError(f"ciphertext has shape {gamma.shape}, decoder expects ({decoder.nc},)")
    return decoder.predict(augmented_features(decode_g(secret, gamma), receiver, poly_degree))


@dataclass
class TwoPhaseResult:
    mse_path1: float
    mse_path2: float

    @property
    def loss(self) -> float:
        return 0.5 * (self.mse_path1 + self.mse_path2)


def _held_out_mse(
    train: FloatArray,
    test: FloatArray,
    key: FloatArray,
    secret: FloatArray,
    sender: FeatureSampler,
    receiver: FeatureSampler,
    config: TwoPhaseConfig,
) -> float:
    decoder = two_phase_train(train, key, secret, sender, receiver, config)
    errors = [
        mse(
            two_phase_decrypt(
                encrypt(c, key, sender, config.encrypt_regularization),
                secret,
                decoder,
                receiver,
                config.poly_degree,
            ),
            c,
        )
        for c in test
    ]
    return float(np.mean(errors))


def two_phase_evaluate(
    training_plaintexts: npt.ArrayLike,
    test_plaintexts: npt.ArrayLike,
    keys: KeySet,
    sampler_a: FeatureSampler,
    sampler_b: FeatureSampler,
    config: TwoPhaseConfig | None = None,
) -> TwoPhaseResult:
    """Train both paths on the shared plaintexts and report held-out MSE on unseen ones."""
    config = config or TwoPhaseConfig()
    train = _check_plaintexts(training_plaintexts)
    test = _check_plaintexts(test_plaintexts)
    if train.shape[1] != test.shape[1]:
        raise DataError("training and test plaintexts have different lengths")
    return TwoPhaseResult(
        mse_path1=_held_out_mse(train, test, keys.a, keys.beta, sampler_a, sampler_b, config),
        mse_path2=_held_out_mse(train, test, keys.b, keys.alpha, sampler_b, sampler_a, config),
    )
