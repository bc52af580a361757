"""Dimension rules that decide when a reservoir readout can represent a sequence."""

from __future__ import annotations

import math

from ..exceptions import ConfigurationError
from ..reservoir import feature_dimension

RANDOM_BASELINE_MSE = 1.0 / 3.0
"""MSE of guessing 0 for a Uniform(-1, 1) plaintext; the uninformative baseline."""


def compute_d_aug(num_qubits: int, poly_degree: int) -> int:
    """Augmented feature dimension Nq(Nq+1)/2 + 1 + K of the two-phase decoder."""
    if num_qubits < 1 or poly_degree < 0:
        raise ConfigurationError(
            f"need num_qubits >= 1 and poly_degree >= 0, got {num_qubits}, {poly_degree}"
        )
    return num_qubits * (num_qubits + 1) // 2 + 1 + poly_degree


def rank_condition_holds(num_qubits: int, nc: int) -> bool:
    """True when D >= Nc, so a readout can reproduce any length-Nc target exactly."""
    return feature_dimension(num_qubits) >= nc


def minimum_qubits(nc: int) -> int:
    """Smallest Nq with Nq^2 >= 2 Nc, the rule of thumb for staying below the phase transition."""
    if nc < 1:
        raise ConfigurationError(f"nc must be positive, got {nc}")
    return max(1, math.ceil(math.sqrt(2 * nc)))
