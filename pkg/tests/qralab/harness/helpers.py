from __future__ import annotations

from typing import Any

from qralab.harness import ExperimentSpec, build_spec


def tiny_spec(**overrides: Any) -> ExperimentSpec:
    """A three-qubit spec small enough to run every cell in a unit test."""
    data: dict[str, Any] = {
        "id": "tiny",
        "protocol": "single_c",
        "noise": "ideal",
        "num_qubits": 3,
        "seeds": 2,
        "trials": 1,
        "nc_list": [3, 4],
        "n_iter": 2,
    }
    data.update(overrides)
    return build_spec(data)
