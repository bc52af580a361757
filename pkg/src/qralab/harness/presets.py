"""The 24 experiments of the reference grid, at full or desk scale."""

from __future__ import annotations

from typing import Any, Literal, NamedTuple

from ..exceptions import ConfigurationError
from ..reservoir import NoiseCondition
from .models import ExperimentSpec, ProtocolName, build_spec

Scale = Literal["full", "desk"]

FULL_NC_LIST = [5, 8, 10, 12, 15, 18, 20, 25, 30, 35]
FULL_M_LIST = [10, 20, 30, 50, 80, 120, 160, 189, 220, 260, 300]
RESET_SHOT_TWO_PHASE_NC_LIST = [5, 10, 15, 20, 30]
RESET_SHOT_TWO_PHASE_M_LIST = [10, 30, 60, 100]


class GridRow(NamedTuple):
    protocol: ProtocolName
    noise: NoiseCondition
    num_qubits: int
    seeds: int
    trials: int


EXPERIMENT_GRID: dict[int, GridRow] = {
    1: GridRow("single_c", "ideal", 10, 16, 3),
    2: GridRow("two_phase", "ideal", 10, 16, 3),
    3: GridRow("single_c", "shot", 10, 16, 3),
    4: GridRow("two_phase", "shot", 10, 16, 3),
    5: GridRow("single_c", "reset_shot", 10, 16, 3),
    6: GridRow("two_phase", "reset_shot", 10, 4, 3),
    7: GridRow("blind_single_c", "ideal", 5, 16, 3),
    8: GridRow("blind_single_c", "shot", 5, 16, 3),
    9: GridRow("blind_single_c", "reset_shot", 5, 16, 3),
    10: GridRow("blind_single_c", "ideal", 7, 16, 3),
    11: GridRow("blind_single_c", "shot", 7, 16, 3),
    12: GridRow("blind_single_c", "reset_shot", 7, 16, 3),
    13: GridRow("two_phase", "ideal", 5, 16, 3),
    14: GridRow("two_phase", "shot", 5, 16, 3),
    15: GridRow("two_phase", "reset_shot", 5, 16, 3),
    16: GridRow("two_phase", "ideal", 7, 16, 3),
    17: GridRow("two_phase", "shot", 7, 16, 3),
    18: GridRow("two_phase", "reset_shot", 7, 16, 3),
    19: GridRow("blind_two_phase", "ideal", 5, 16, 3),
    20: GridRow("blind_two_phase", "shot", 5, 16, 3),
    21: GridRow("blind_two_phase", "reset_shot", 5, 16, 3),
    22: GridRow("blind_two_phase", "ideal", 7, 16, 3),
    23: GridRow("blind_two_phase", "shot", 7, 16, 3),
    24: GridRow("blind_two_phase", "reset_shot", 7, 16, 3),
}


def _full_grid(exp_id: int, row: GridRow) -> dict[str, Any]:
    grid: dict[str, Any] = {"nc_list": FULL_NC_LIST}
    if exp_id == 6:
        grid = {"nc_list": RESET_SHOT_TWO_PHASE_NC_LIST, "m_list": RESET_SHOT_TWO_PHASE_M_LIST}
    elif row.protocol == "two_phase":
        grid["m_list"] = FULL_M_LIST
    return grid


def _desk_grid(exp_id: int, row: GridRow) -> dict[str, Any]:
    dense = row.noise == "reset_shot" and row.num_qubits == 10
    grid: dict[str, Any] = {"seeds": 2 if dense else 4, "trials": 1}
    if row.protocol == "single_c":
        grid["nc_list"] = [5] if dense else [5, 10]
    elif row.protocol == "two_phase":
        if exp_id == 6:
            grid.update(nc_list=[5], m_list=[10, 30])
        elif row.num_qubits == 10:
            grid.update(nc_list=[5, 30], m_list=[30, 300])
        else:
            grid.update(nc_list=[15, 25], m_list=[300])
    elif row.protocol == "blind_single_c":
        grid["nc_list"] = [5, 10, 20, 35]
    else:
        grid["nc_list"] = [10]
    return grid


def preset(exp_id: int, scale: Scale = "full") -> ExperimentSpec:
    """Spec of experiment `exp_id` (1-24).

    `full` reproduces the complete grid. `desk` keeps the protocol, noise condition and qubit
    count but cuts the seeds to at most 4, runs one trial and a reduced Nc/M grid.

    Raises:
        ConfigurationError: If `exp_id` or `scale` is unknown.
    """
    row = EXPERIMENT_GRID.get(exp_id)
    if row is None:
        raise ConfigurationError(f"unknown experiment id {exp_id}; expected 1-24")
    data: dict[str, Any] = {
        "id": exp_id,
        "protocol": row.protocol,
        "noise": row.noise,
        "num_qubits": row.num_qubits,
        "seeds": row.seeds,
        "trials": row.trials,
    }
    if scale == "full":
        data.update(_full_grid(exp_id, row))
    elif scale == "desk":
        data.update(_desk_grid(exp_id, row))
    else:
        raise ConfigurationError(f"unknown scale {scale!r}; expected 'full' or 'desk'")
    return build_spec(data)
