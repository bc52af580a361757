from __future__ import annotations

import numpy as np
import numpy.typing as npt

from ..codec import KeySet
from ..reservoir import FeatureSampler, NoiseProfile, ReservoirConfig
from ..solvers import AlsConfig, AlsTrace, als_single_c


def run_single_c(
    plaintext: npt.ArrayLike,
    keys: KeySet,
    profile_a: NoiseProfile,
    profile_b: NoiseProfile,
    reservoir_config: ReservoirConfig,
    als_config: AlsConfig | None = None,
    rng_a: np.random.Generator | None = None,
    rng_b: np.random.Generator | None = None,
) -> AlsTrace:
    """Single-ciphertext protocol: ALS on one plaintext shared by two reservoirs.

    `rng_a` and `rng_b` drive the shot noise of each reservoir and are required when the config
    sets `shots`.
    """
    sampler_a = FeatureSampler(profile_a, reservoir_config, rng_a)
    sampler_b = FeatureSampler(profile_b, reservoir_config, rng_b)
    return als_single_c(plaintext, keys, sampler_a, sampler_b, als_config)
