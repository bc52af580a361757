from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt

from ..exceptions import ConfigurationError
from ..quantum.state import SimulationMode, check_num_qubits

NoiseCondition = Literal["ideal", "shot", "reset_shot"]
ShotRecord = Literal["fresh", "per_sequence"]

DEFAULT_SHOTS = 1000


def default_entangle_pairs(num_qubits: int) -> list[tuple[int, int]]:
    """Pair-separable topology (0, 1), (2, 3), ... An odd last qubit stays unpaired."""
    return [(i, i + 1) for i in range(0, num_qubits - 1, 2)]


def feature_dimension(num_qubits: int) -> int:
    """Nq single-qubit + Nq(Nq-1)/2 two-qubit expectations + 1 bias column."""
    num_qubits = check_num_qubits(num_qubits)
    return num_qubits + num_qubits * (num_qubits - 1) // 2 + 1


@dataclass
class ReservoirConfig:
    """How a reservoir circuit is simulated and read out."""

    num_qubits: int
    """Register size, 1 to 14."""

    scaling: float = 1.0
    """Input scaling s in theta = s * u."""

    mode: SimulationMode = "pure"
    """`"pure"` evolves a statevector with noise acting only through the rotation angles;
    `"mixed"` evolves a density matrix and also applies the reset channels."""

    shots: int | None = None
    """Measurement shots per observable. `None` reads out exact expectation values."""

    shot_record: ShotRecord = "fresh"
    """`"fresh"` draws a new binomial record every time a feature matrix is measured.
    `"per_sequence"` draws one record when an input sequence is first simulated and replays it
    on every later measurement of that sequence."""

    entangle_pairs: list[tuple[int, int]] | None = None
    """Qubit pairs of the RZZ layer. Defaults to the pair-separable topology."""

    input_map: Callable[[npt.NDArray[np.float64]], npt.NDArray[np.float64]] | None = None
    """Element-wise input transform u = phi(x). `None` means identity."""

    def __post_init__(self) -> None:
        self.num_qubits = check_num_qubits(self.num_qubits)
        if not np.isfinite(self.scaling):
            raise ConfigurationError(f"scaling must be finite, got {self.scaling!r}")
        if self.mode not in ("pure", "mixed"):
            raise ConfigurationError(f"unknown simulation mode {self.mode!r}")
        if self.shots is not None and (isinstance(self.shots, bool) or self.shots < 1):
            raise ConfigurationError(f"shots must be a positive integer, got {self.shots!r}")
        if self.shot_record not in ("fresh", "per_sequence"):
            raise ConfigurationError(f"unknown shot record policy {self.shot_record!r}")

        if self.entangle_pairs is None:
            self.entangle_pairs = default_entangle_pairs(self.num_qubits)
        pairs = [(int(i), int(j)) for i, j in self.entangle_pairs]
        used: set[int] = set()
        for i, j in pairs:
            if i == j or not (0 <= i < self.num_qubits and 0 <= j < self.num_qubits):
                raise ConfigurationError(f"invalid entangling pair ({i}, {j})")
            if i in used or j in used:
                raise ConfigurationError(f"entangling pairs must be disjoint, got {pairs}")
            used.update((i, j))
        self.entangle_pairs = pairs

    @property
    def feature_dimension(self) -> int:
        return feature_dimension(self.num_qubits)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        assert self.entangle_pairs is not None
        return self.entangle_pairs

    def encode_inputs(self, inputs: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        if self.input_map is None:
            return inputs
        return np.asarray(self.input_map(inputs), dtype=np.float64)

    @classmethod
    def for_condition(
        cls,
        num_qubits: int,
        noise: NoiseCondition,
        n_shots: int = DEFAULT_SHOTS,
        scaling: float = 1.0,
    ) -> ReservoirConfig:
        """Config for one of the three noise conditions.

        `ideal` reads exact expectations from a statevector, `shot` adds binomial shot noise, and
        `reset_shot` simulates the reset channels on a density matrix with shot noise. The
        density-matrix condition measures each input sequence once and replays that record.
        """
        if noise == "ideal":
            return cls(num_qubits=num_qubits, scaling=scaling)
        if noise == "shot":
            return cls(num_qubits=num_qubits, scaling=scaling, shots=n_shots)
        if noise == "reset_shot":
            return cls(
                num_qubits=num_qubits,
                scaling=scaling,
                mode="mixed",
                shots=n_shots,
                shot_record="per_sequence",
            )
        raise ConfigurationError(f"unknown noise condition {noise!r}")
