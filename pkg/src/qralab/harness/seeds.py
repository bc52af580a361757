"""Named random streams derived from one master seed.

Every stream is a PCG64 generator seeded by the `SeedSequence` entropy

    [master_seed, blake2b_64(label), seed_index, trial_index, *extra]

where `blake2b_64` is the 8-byte BLAKE2b digest of the UTF-8 label read as a little-endian
unsigned integer. The same master seed and coordinates always give the same stream.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from ..exceptions import ConfigurationError

DEFAULT_MASTER_SEED = 20240101

STREAM_LABELS = (
    "keys",
    "plaintexts_train",
    "plaintexts_test",
    "noise_profile_a",
    "noise_profile_b",
    "shot_noise",
)


def label_hash(label: str) -> int:
    digest = hashlib.blake2b(label.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


@dataclass(frozen=True)
class SeedScheme:
    master_seed: int = DEFAULT_MASTER_SEED

    def __post_init__(self) -> None:
        if not 0 <= self.master_seed < 2**64:
            raise ConfigurationError(
                f"master seed must be an unsigned 64-bit integer, got {self.master_seed}"
            )

    def seed_sequence(
        self, label: str, seed_index: int, trial_index: int, *extra: int
    ) -> np.random.SeedSequence:
        if label not in STREAM_LABELS:
            raise ConfigurationError(f"unknown stream label {label!r}")
        coordinates = [seed_index, trial_index, *extra]
        if any(c < 0 for c in coordinates):
            raise ConfigurationError(f"stream coordinates must be non-negative, got {coordinates}")
        return np.random.SeedSequence([self.master_seed, label_hash(label), *coordinates])

    def stream(
        self, label: str, seed_index: int, trial_index: int, *extra: int
    ) -> np.random.Generator:
        return np.random.Generator(
            np.random.PCG64(self.seed_sequence(label, seed_index, trial_index, *extra))
        )
