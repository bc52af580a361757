from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from qralab.codec import KeySet
from qralab.reservoir import (
    FeatureSampler,
    NoiseProfile,
    ReservoirConfig,
    sample_noise_profile,
)

SamplerFactory = Callable[..., FeatureSampler]


@pytest.fixture
def profile_a() -> NoiseProfile:
    return sample_noise_profile(4, np.random.default_rng(11))


@pytest.fixture
def profile_b() -> NoiseProfile:
    return sample_noise_profile(4, np.random.default_rng(12))


@pytest.fixture
def keys_nc5() -> KeySet:
    return KeySet.generate(5, 4, np.random.default_rng(13))


@pytest.fixture
def make_sampler() -> SamplerFactory:
    """Builds a 4-qubit sampler for a profile; `shots` switches on binomial readout."""

    def factory(
        profile: NoiseProfile,
        shots: int | None = None,
        mode: str = "pure",
        seed: int = 0,
        shot_record: str = "fresh",
    ) -> FeatureSampler:
        config = ReservoirConfig(
            num_qubits=profile.num_qubits,
            shots=shots,
            mode=mode,  # type: ignore[arg-type]
            shot_record=shot_record,  # type: ignore[arg-type]
        )
        rng = np.random.default_rng(seed) if shots is not None else None
        return FeatureSampler(profile, config, rng)

    return factory
