"""Per-gate reset probabilities of one reservoir."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..exceptions import ConfigurationError
from ..quantum.state import check_num_qubits

FloatArray = npt.NDArray[np.float64]


def noise_parameter_count(num_qubits: int) -> int:
    """Nq encoding + floor(Nq/2) entangling + Nq rotation + Nq output probabilities."""
    num_qubits = check_num_qubits(num_qubits)
    return 3 * num_qubits + num_qubits // 2


def _frozen_probabilities(name: str, values: npt.ArrayLike, length: int) -> FloatArray:
    array = np.array(values, dtype=np.float64).reshape(-1)
    if array.shape != (length,):
        raise ConfigurationError(f"{name} must have {length} entries, got {array.size}")
    if not np.all(np.isfinite(array)) or np.any(array < 0.0) or np.any(array > 1.0):
        raise ConfigurationError(f"{name} entries must lie in [0, 1]")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class NoiseProfile:
    """The four groups of reset probabilities that modulate a reservoir circuit.

    Arrays are copied and made read-only on construction, so a profile never changes once drawn.
    """

    p_enc: FloatArray
    """Encoding layer, one per qubit."""

    p_ent: FloatArray
    """Entangling layer, one per qubit pair."""

    p_rot: FloatArray
    """Fixed RY rotation layer, one per qubit."""

    p_out: FloatArray
    """Output RZ layer, one per qubit."""

    num_qubits: int = field(init=False)

    def __post_init__(self) -> None:
        num_qubits = int(np.size(self.p_enc))
        check_num_qubits(num_qubits)
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(self, "p_enc", _frozen_probabilities("p_enc", self.p_enc, num_qubits))
        object.__setattr__(
            self, "p_ent", _frozen_probabilities("p_ent", self.p_ent, num_qubits // 2)
        )
        object.__setattr__(self, "p_rot", _frozen_probabilities("p_rot", self.p_rot, num_qubits))
        object.__setattr__(self, "p_out", _frozen_probabilities("p_out", self.p_out, num_qubits))

    @property
    def parameter_count(self) -> int:
        return noise_parameter_count(self.num_qubits)

    def as_vector(self) -> FloatArray:
        """All probabilities in (p_enc, p_ent, p_rot, p_out) order."""
        return np.concatenate([self.p_enc, self.p_ent, self.p_rot, self.p_out])

    @classmethod
    def from_vector(cls, num_qubits: int, values: npt.ArrayLike) -> NoiseProfile:
        num_qubits = check_num_qubits(num_qubits)
        vector = np.asarray(values, dtype=np.float64).reshape(-1)
        expected = noise_parameter_count(num_qubits)
        if vector.size != expected:
            raise ConfigurationError(
                f"a {num_qubits}-qubit profile has {expected} parameters, got {vector.size}"
            )
        n, half = num_qubits, num_qubits // 2
        return cls(
            p_enc=vector[:n],
            p_ent=vector[n : n + half],
            p_rot=vector[n + half : 2 * n + half],
            p_out=vector[2 * n + half :],
        )

    @classmethod
    def constant(cls, num_qubits: int, p: float) -> NoiseProfile:
        return cls.from_vector(num_qubits, np.full(noise_parameter_count(num_qubits), p))


def sample_noise_profile(num_qubits: int, rng: np.random.Generator) -> NoiseProfile:
    """Draw every reset probability i.i.d. from Uniform[0, 1)."""
    return NoiseProfile.from_vector(
        num_qubits, rng.uniform(0.0, 1.0, size=noise_parameter_count(num_qubits))
    )


def profile_summary(profiles: Sequence[NoiseProfile]) -> tuple[float, float, int]:
    """Mean, standard deviation and count of all parameters pooled across `profiles`."""
    if not profiles:
        raise ConfigurationError("profile_summary needs at least one profile")
    pooled = np.concatenate([profile.as_vector() for profile in profiles])
    return float(pooled.mean()), float(pooled.std()), int(pooled.size)
