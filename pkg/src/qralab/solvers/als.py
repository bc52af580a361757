"""Alternating least squares over the four readouts of the reversible encode/decode protocol.

Path 1 encrypts at reservoir a and decrypts at reservoir b:

    gamma = V_a(F(A, C)) W_enc_a,    C1 = V_b(G(beta, gamma)) W_dec_b

Path 2 is the mirror image with (B, alpha) and the reservoirs swapped. Each iteration re-solves
W_enc_a, W_dec_b, W_enc_b and W_dec_a in that order on one measurement record of every feature
matrix, then measures the loss (MSE_1 + MSE_2) / 2 on a new measurement of every feature matrix.
That measurement is a fresh draw unless the reservoir replays one record per input sequence.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..codec import KeySet, decode_g, encode_f
from ..exceptions import ConfigurationError, DataError
from ..reservoir import FeatureSampler
from .ridge import FloatArray, ReadoutWeights, ridge_solve

# Set up logger
logger = logging.getLogger("qralab.solvers.als")

FEATURE_REUSE_TOLERANCE = 1e-12


def mse(estimate: npt.ArrayLike, truth: npt.ArrayLike) -> float:
    diff = np.asarray(estimate, dtype=np.float64) - np.asarray(truth, dtype=np.float64)
    return float(np.mean(diff**2))


@dataclass
class AlsConfig:
    """Settings for the alternating least squares loop."""

    n_iter: int = 40
    """Number of ALS iterations."""

    regularization: float = 1e-10
    """Ridge lambda for all four readouts."""

    reuse_encoder_features: bool = False
    """Reuse a reservoir's encoder-side feature record for its decoder side when the two input
    sequences coincide. A warning is logged whenever they do not."""

    def __post_init__(self) -> None:
        if self.n_iter < 1:
            raise ConfigurationError(f"n_iter must be at least 1, got {self.n_iter}")
        if not np.isfinite(self.regularization) or self.regularization < 0:
            raise ConfigurationError(
                f"regularization must be >= 0, got {self.regularization!r}"
            )


@dataclass
class AlsTrace:
    """Per-iteration losses and per-path MSE of one run."""

    loss: list[float] = field(default_factory=list)
    mse_path1: list[float] = field(default_factory=list)
    mse_path2: list[float] = field(default_factory=list)

    def record(self, mse_path1: float, mse_path2: float) -> float:
        loss = 0.5 * (mse_path1 + mse_path2)
        self.mse_path1.append(mse_path1)
        self.mse_path2.append(mse_path2)
        self.loss.append(loss)
        return loss

    @property
    def n_iter(self) -> int:
        return len(self.loss)

    def _last(self, values: list[float]) -> float:
        if not values:
            raise DataError("trace is empty")
        return values[-1]

    @property
    def final_loss(self) -> float:
        return self._last(self.loss)

    @property
    def final_mse_path1(self) -> float:
        return self._last(self.mse_path1)

    @property
    def final_mse_path2(self) -> float:
        return self._last(self.mse_path2)

    def path_ratio(self, last: int = 1) -> float:
        """Mean Path 1 MSE over the last `last` iterations divided by the Path 2 mean."""
        if self.n_iter == 0:
            raise DataError("trace is empty")
        window = slice(-max(1, last), None)
        return float(np.mean(self.mse_path1[window]) / np.mean(self.mse_path2[window]))


@dataclass
class AlsWeights:
    enc_a: ReadoutWeights
    dec_b: ReadoutWeights
    enc_b: ReadoutWeights
    dec_a: ReadoutWeights


class _DecoderFeatures:
    """Decoder-side measurement of a reservoir, optionally reusing its encoder-side record."""

    def __init__(self, reuse: bool):
        self.reuse = reuse
        self._warned = False

    def __call__(
        self,
        sampler: FeatureSampler,
        decoder_inputs: FloatArray,
        encoder_inputs: FloatArray,
        encoder_features: FloatArray,
    ) -> FloatArray:
        if self.reuse:
            gap = float(np.max(np.abs(decoder_inputs - encoder_inputs)))
            if gap <= FEATURE_REUSE_TOLERANCE:
                return encoder_features
            if not self._warned:
                logger.warning(
                    "decoder inputs differ from encoder inputs by %.3e; recomputing features",
                    gap,
                )
                self._warned = True
        return sampler.measure(decoder_inputs)


def _forward(
    weights: AlsWeights,
    e_a: FloatArray,
    e_b: FloatArray,
    keys: KeySet,
    sampler_a: FeatureSampler,
    sampler_b: FeatureSampler,
) -> tuple[FloatArray, FloatArray]:
    """Both reconstructions on fresh measurement records."""
    gamma = weights.enc_a.predict(sampler_a.measure(e_a))
    c1 = weights.dec_b.predict(sampler_b.measure(decode_g(keys.beta, gamma)))
    gamma_p = weights.enc_b.predict(sampler_b.measure(e_b))
    c2 = weights.dec_a.predict(sampler_a.measure(decode_g(keys.alpha, gamma_p)))
    return c1, c2


def als_single_c(
    plaintext: npt.ArrayLike,
    keys: KeySet,
    sampler_a: FeatureSampler,
    sampler_b: FeatureSampler,
    config: AlsConfig | None = None,
) -> AlsTrace:
    """Solve the four readouts for one known plaintext and trace the loss.

    Args:
        plaintext: The plaintext C, entries in [-1, 1].
        keys: Distributed keys A, B and secret keys alpha, beta.
        sampler_a: Reservoir a.
        sampler_b: Reservoir b.
        config: Iteration count, lambda and the feature reuse flag.

    Returns:
        One loss and per-path MSE entry per iteration.
    """
    config = config or AlsConfig()
    c = np.asarray(plaintext, dtype=np.float64)
    e_a = encode_f(keys.a, c)
    e_b = encode_f(keys.b, c)
    noisy = sampler_a.noisy or sampler_b.noisy
    decoder_features = _DecoderFeatures(config.reuse_encoder_features)
    lam = config.regularization
    trace = AlsTrace()

    for iteration in range(1, config.n_iter + 1):
        v_a = sampler_a.measure(e_a)
        v_b = sampler_b.measure(e_b)

        enc_a = ridge_solve(v_a, e_a, lam)
        gamma = enc_a.predict(v_a)
        v_b_dec = decoder_features(sampler_b, decode_g(keys.beta, gamma), e_b, v_b)
        dec_b = ridge_solve(v_b_dec, c, lam)

        enc_b = ridge_solve(v_b, e_b, lam)
        gamma_p = enc_b.predict(v_b)
        v_a_dec = decoder_features(sampler_a, decode_g(keys.alpha, gamma_p), e_a, v_a)
        dec_a = ridge_solve(v_a_dec, c, lam)

        if noisy:
            weights = AlsWeights(enc_a=enc_a, dec_b=dec_b, enc_b=enc_b, dec_a=dec_a)
            c1, c2 = _forward(weights, e_a, e_b, keys, sampler_a, sampler_b)
        else:
            c1, c2 = dec_b.predict(v_b_dec), dec_a.predict(v_a_dec)

        loss = trace.record(mse(c1, c), mse(c2, c))
        logger.debug("ALS iteration %s: loss %.3e", iteration, loss)

    return trace
