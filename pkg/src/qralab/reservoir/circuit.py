"""The four-layer noise-modulated reservoir circuit and its feature readout."""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from ..exceptions import ConfigurationError, DataError
from ..quantum import (
    MixedState,
    QuantumState,
    apply_reset_channel,
    apply_rzz,
    apply_single_qubit_channel,
    apply_single_qubit_rotation,
    gate_then_reset_superoperator,
    init_plus,
    probabilities,
    rotation_matrix,
)
from ..quantum._kernels import z_signs
from ..quantum.gates import Axis
from .config import ReservoirConfig, feature_dimension
from .noise import NoiseProfile

# Set up logger
logger = logging.getLogger("qralab.reservoir.circuit")

FeatureMatrix = npt.NDArray[np.float64]
"""Nc x D array. Row t holds <Z_1>..<Z_Nq>, then <Z_i Z_j> for i < j, then a constant 1."""


@lru_cache(maxsize=32)
def _observable_signs(num_qubits: int) -> npt.NDArray[np.float64]:
    singles = z_signs(num_qubits)
    i, j = np.triu_indices(num_qubits, k=1)
    signs = np.vstack([singles, singles[i] * singles[j]])
    signs.setflags(write=False)
    return signs


def feature_labels(num_qubits: int) -> list[str]:
    """Column names of a feature matrix, e.g. `Z0`, `Z0Z1`, `bias`."""
    singles = [f"Z{i}" for i in range(num_qubits)]
    pairs = [f"Z{i}Z{j}" for i in range(num_qubits) for j in range(i + 1, num_qubits)]
    return [*singles, *pairs, "bias"]


def extract_features(state: QuantumState) -> npt.NDArray[np.float64]:
    """One feature row for the current state."""
    values = _observable_signs(state.num_qubits) @ probabilities(state)
    row = np.empty(feature_dimension(state.num_qubits), dtype=np.float64)
    row[:-1] = np.clip(values, -1.0, 1.0)
    row[-1] = 1.0
    return row


def _rotate(state: QuantumState, qubit: int, axis: Axis, angle: float, p: float) -> None:
    if isinstance(state, MixedState):
        superop = gate_then_reset_superoperator(rotation_matrix(axis, angle), p)
        apply_single_qubit_channel(state, qubit, superop)
    else:
        apply_single_qubit_rotation(state, qubit, axis, angle)


def _check_compatible(state: QuantumState, profile: NoiseProfile, config: ReservoirConfig) -> None:
    if state.num_qubits != config.num_qubits or profile.num_qubits != config.num_qubits:
        raise ConfigurationError(
            f"state ({state.num_qubits} qubits), profile ({profile.num_qubits}) and config "
            f"({config.num_qubits}) disagree"
        )
    if len(config.pairs) != profile.p_ent.size:
        raise ConfigurationError(
            f"{len(config.pairs)} entangling pairs but {profile.p_ent.size} entangling "
            "probabilities"
        )


def reservoir_step(
    state: QuantumState, u: float, profile: NoiseProfile, config: ReservoirConfig
) -> QuantumState:
    """Feed one input value through the encoding, entangling, rotation and output layers.

    Each gate is followed by a reset channel with the gate's own probability when `state` is a
    density matrix. In pure mode the probabilities only modulate the rotation angles.

    Args:
        state: The reservoir state, updated in place.
        u: Input value for this time step.
        profile: Reset probabilities of this reservoir.
        config: Scaling and entangling topology.

    Returns:
        The updated state.

    Raises:
        ConfigurationError: If the state, profile and config sizes disagree.
    """
    _check_compatible(state, profile, config)
    theta = config.scaling * float(u)
    mixed = isinstance(state, MixedState)

    for i, p in enumerate(profile.p_enc):
        _rotate(state, i, "X", theta * (1.0 + p), p)

    for (i, j), p in zip(config.pairs, profile.p_ent):
        apply_rzz(state, i, j, theta * (1.0 + p))
        if mixed:
            apply_reset_channel(state, j, p)

    for i, p in enumerate(profile.p_rot):
        _rotate(state, i, "Y", p * math.pi, p)

    for i, p in enumerate(profile.p_out):
        _rotate(state, i, "Z", theta * (1.0 + p), p)

    return state


def run_sequence(
    inputs: npt.ArrayLike, profile: NoiseProfile, config: ReservoirConfig
) -> FeatureMatrix:
    """Run the reservoir recurrently over `inputs` and read out one feature row per step.

    The state is prepared in |+>^Nq once and carried across steps.

    Raises:
        DataError: If `inputs` is empty, not one-dimensional or not finite.
    """
    sequence = np.asarray(inputs, dtype=np.float64)
    if sequence.ndim != 1 or sequence.size == 0:
        raise DataError(f"input sequence must be a non-empty vector, got shape {sequence.shape}")
    if not np.all(np.isfinite(sequence)):
        raise DataError("input sequence contains non-finite values")

    state = init_plus(config.num_qubits, config.mode)
    features = np.empty((sequence.size, config.feature_dimension), dtype=np.float64)
    for t, u in enumerate(config.encode_inputs(sequence)):
        reservoir_step(state, float(u), profile, config)
        features[t] = extract_features(state)
    logger.debug(
        "ran %s-qubit %s reservoir over %s steps", config.num_qubits, config.mode, sequence.size
    )
    return features
