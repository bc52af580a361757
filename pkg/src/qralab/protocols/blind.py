"""Blind decoder variants, where the receiver bootstraps its regression targets without ever
seeing the plaintext.

Both variants keep the sender side exactly as in their non-blind counterparts. Only the receiver
classes below produce reconstructions, and they are never handed a plaintext; the plaintext is
used afterwards to score them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..codec import KeySet, decode_g
from ..exceptions import ConfigurationError, DataError
from ..reservoir import FeatureSampler
from ..solvers import AlsConfig, AlsTrace, ReadoutWeights, mse, ridge_solve
from .two_phase import ENCRYPT_REGULARIZATION, TwoPhaseConfig, augmented_features, encrypt

# Set up logger
logger = logging.getLogger("qralab.protocols.blind")

FloatArray = npt.NDArray[np.float64]

BLIND_REGULARIZATION = 1e-6
RECEIVER_SHRINKAGE = 1.0


@dataclass
class BlindEstimate:
    """The receiver's current stand-in for the plaintext."""

    values: FloatArray
    iteration: int = 0

    def __post_init__(self) -> None:
        self.values = np.array(self.values, dtype=np.float64)
        if not np.all(np.isfinite(self.values)):
            raise DataError("blind estimate contains non-finite values")


@dataclass
class BlindConfig:
    """Settings of the two-phase blind decoder."""

    n_iter: int = 40
    """Cross-path refinement cycles."""

    n_train: int = 150
    """Number of shared ciphertexts M."""

    two_phase: TwoPhaseConfig = field(default_factory=TwoPhaseConfig)
    """Polynomial degree and regularization of the per-position regressions."""

    def __post_init__(self) -> None:
        if self.n_iter < 1:
            raise ConfigurationError(f"n_iter must be at least 1, got {self.n_iter}")
        if self.n_train < 1:
            raise ConfigurationError(f"n_train must be at least 1, got {self.n_train}")


class SingleCBlindReceiver:
    """Receiver of the Single-C blind decoder.

    The Path 1 decoder at reservoir b is fit to the current estimate, the Path 2 decoder at
    reservoir a is fit to the Path 1 reconstruction, and the Path 2 reconstruction becomes the
    next estimate. The estimate starts as the first ciphertext received.

    Both fits penalize the weights with `regularization` plus `shrinkage` times the squared
    Frobenius norm of their feature matrix. With `shrinkage >= 1` every fit maps the target to a
    vector at most half as long, so the estimate decays towards zero instead of reproducing the
    ciphertext when the decoders could interpolate it exactly.
    """

    def __init__(
        self,
        alpha: FloatArray,
        beta: FloatArray,
        sampler_a: FeatureSampler,
        sampler_b: FeatureSampler,
        regularization: float = BLIND_REGULARIZATION,
        shrinkage: float = RECEIVER_SHRINKAGE,
    ):
        if not np.isfinite(shrinkage) or shrinkage < 0:
            raise ConfigurationError(f"shrinkage must be >= 0, got {shrinkage!r}")
        self.alpha = alpha
        self.beta = beta
        self.sampler_a = sampler_a
        self.sampler_b = sampler_b
        self.regularization = regularization
        self.shrinkage = shrinkage
        self.estimate: BlindEstimate | None = None
        self.dec_b: ReadoutWeights | None = None
        self.dec_a: ReadoutWeights | None = None

    def _fit(self, features: FloatArray, targets: FloatArray) -> ReadoutWeights:
        penalty = self.regularization + self.shrinkage * float(np.sum(features**2))
        return ridge_solve(features, targets, penalty)

    def update(self, gamma: FloatArray, gamma_p: FloatArray) -> tuple[FloatArray, FloatArray]:
        """One cross-path round on the ciphertexts of both paths; returns both reconstructions."""
        if self.estimate is None:
            self.estimate = BlindEstimate(values=gamma)
        v_b = self.sampler_b.measure(decode_g(self.beta, gamma))
        self.dec_b = self._fit(v_b, self.estimate.values)
        rec1 = self.dec_b.predict(v_b)

        v_a = self.sampler_a.measure(decode_g(self.alpha, gamma_p))
        self.dec_a = self._fit(v_a, rec1)
        rec2 = self.dec_a.predict(v_a)

        self.estimate = BlindEstimate(values=rec2, iteration=self.estimate.iteration + 1)
        return rec1, rec2

    def reconstruct(self, gamma: FloatArray, gamma_p: FloatArray) -> tuple[FloatArray, FloatArray]:
        """Apply the current decoders to ciphertexts on fresh measurement records."""
        if self.dec_a is None or self.dec_b is None:
            raise DataError("receiver has not been updated yet")
        rec1 = self.dec_b.predict(self.sampler_b.measure(decode_g(self.beta, gamma)))
        rec2 = self.dec_a.predict(self.sampler_a.measure(decode_g(self.alpha, gamma_p)))
        return rec1, rec2


def blind_single_c(
    plaintext: npt.ArrayLike,
    keys: KeySet,
    sampler_a: FeatureSampler,
    sampler_b: FeatureSampler,
    config: AlsConfig | None = None,
    shrinkage: float = RECEIVER_SHRINKAGE,
    encrypt_regularization: float = ENCRYPT_REGULARIZATION,
) -> AlsTrace:
    """Single-C ALS with the decoder targets replaced by cross-path estimates.

    The sender solves W_enc_a and W_enc_b against F(A, C) and F(B, C) with
    `encrypt_regularization`, as in the two-phase protocol. The receiver only sees the two
    ciphertexts and fits its decoders with `config.regularization` and `shrinkage`. The trace
    scores the receiver's reconstructions against C.
    """
    config = config or AlsConfig(regularization=BLIND_REGULARIZATION)
    c = np.asarray(plaintext, dtype=np.float64)
    noisy = sampler_a.noisy or sampler_b.noisy
    receiver = SingleCBlindReceiver(
        keys.alpha, keys.beta, sampler_a, sampler_b, config.regularization, shrinkage
    )
    trace = AlsTrace()

    for iteration in range(1, config.n_iter + 1):
        gamma = encrypt(c, keys.a, sampler_a, encrypt_regularization)
        gamma_p = encrypt(c, keys.b, sampler_b, encrypt_regularization)
        rec1, rec2 = receiver.update(gamma, gamma_p)
        if noisy:
            rec1, rec2 = receiver.reconstruct(gamma, gamma_p)
        loss = trace.record(mse(rec1, c), mse(rec2, c))
        logger.debug("blind Single-C iteration %s: loss %.3e", iteration, loss)

    return trace


class TwoPhaseBlindReceiver:
    """Receiver of the two-phase blind decoder, holding the augmented features of both paths."""

    def __init__(
        self,
        path1_features: FloatArray,
        path2_features: FloatArray,
        initial: FloatArray,
        regularization: float,
    ):
        if path1_features.shape != path2_features.shape:
            raise DataError("both paths need augmented features of the same shape")
        self.path1_features = path1_features
        self.path2_features = path2_features
        self.estimate = np.array(initial, dtype=np.float64)
        self.regularization = regularization

    def _regress(self, features: FloatArray, targets: FloatArray) -> FloatArray:
        fitted = np.empty_like(targets)
        for i in range(targets.shape[1]):
            weights = ridge_solve(features[:, i, :], targets[:, i], self.regularization)
            fitted[:, i] = weights.predict(features[:, i, :])
        return fitted

    def update(self) -> tuple[FloatArray, FloatArray]:
        """Fit Path 1 to the estimate, Path 2 to the Path 1 fit, and adopt the Path 2 fit."""
        rec1 = self._regress(self.path1_features, self.estimate)
        rec2 = self._regress(self.path2_features, rec1)
        self.estimate = rec2
        return rec1, rec2


@dataclass
class BlindTwoPhaseResult:
    trace: AlsTrace

    @property
    def final_mse(self) -> float:
        return self.trace.final_loss


def blind_two_phase(
    training_plaintexts: npt.ArrayLike,
    keys: KeySet,
    sampler_a: FeatureSampler,
    sampler_b: FeatureSampler,
    config: BlindConfig | None = None,
) -> BlindTwoPhaseResult:
    """Two-phase training with regression targets bootstrapped from the decoded ciphertexts.

    Args:
        training_plaintexts: (M, Nc) plaintexts. Only the sender uses them, plus the scoring.
        keys: Path 1 uses (A, beta), Path 2 uses (B, alpha).
        sampler_a: Reservoir a.
        sampler_b: Reservoir b.
        config: Iterations and the per-position regression settings.

    Returns:
        The per-iteration MSE of both paths against the true plaintexts.
    """
    config = config or BlindConfig()
    tp = config.two_phase
    plaintexts = np.asarray(training_plaintexts, dtype=np.float64)
    if plaintexts.ndim != 2 or plaintexts.shape[0] < 1:
        raise ConfigurationError("at least one training plaintext is required")

    gammas = [encrypt(c, keys.a, sampler_a, tp.encrypt_regularization) for c in plaintexts]
    gammas_p = [encrypt(c, keys.b, sampler_b, tp.encrypt_regularization) for c in plaintexts]
    decoded = np.stack([decode_g(keys.beta, g) for g in gammas])
    path1 = np.stack([augmented_features(d, sampler_b, tp.poly_degree) for d in decoded])
    path2 = np.stack(
        [
            augmented_features(decode_g(keys.alpha, g), sampler_a, tp.poly_degree)
            for g in gammas_p
        ]
    )

    receiver = TwoPhaseBlindReceiver(path1, path2, decoded, tp.regularization)
    trace = AlsTrace()
    for iteration in range(1, config.n_iter + 1):
        rec1, rec2 = receiver.update()
        loss = trace.record(mse(rec1, plaintexts), mse(rec2, plaintexts))
        logger.debug("blind two-phase iteration %s: loss %.4f", iteration, loss)
    return BlindTwoPhaseResult(trace=trace)
