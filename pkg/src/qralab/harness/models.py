from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..exceptions import ConfigurationError, DataError
from ..protocols import BLIND_REGULARIZATION
from ..reservoir import DEFAULT_SHOTS, NoiseCondition, ReservoirConfig

ProtocolName = Literal["single_c", "two_phase", "blind_single_c", "blind_two_phase"]

ITERATIVE_PROTOCOLS: frozenset[str] = frozenset({"single_c", "blind_single_c", "blind_two_phase"})

SINGLE_C_REGULARIZATION = 1e-10
TWO_PHASE_REGULARIZATION = 1e-6
DEFAULT_N_TEST = 20
RESET_SHOT_N_TEST = 3
BLIND_TRAINING_SIZE = 150

_DEFAULT_REGULARIZATION: dict[str, float] = {
    "single_c": SINGLE_C_REGULARIZATION,
    "two_phase": TWO_PHASE_REGULARIZATION,
    "blind_single_c": BLIND_REGULARIZATION,
    "blind_two_phase": BLIND_REGULARIZATION,
}


class ExperimentSpec(BaseModel):
    """A declarative experiment: one protocol under one noise condition over a grid of cells.

    Missing optional values are filled from the protocol and noise condition when the spec is
    validated, so a validated spec is always fully resolved.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: Union[int, str]
    """Table I experiment number, or a free-form label for custom specs."""

    protocol: ProtocolName
    noise: NoiseCondition
    num_qubits: int = Field(ge=1, le=14)
    seeds: int = Field(ge=1)
    trials: int = Field(ge=1)
    nc_list: list[int] = Field(min_length=1)
    m_list: Optional[list[int]] = None
    """Training-set sizes M. Required for the two-phase protocols, unused otherwise."""

    n_shots: Optional[int] = Field(default=None, ge=1)
    poly_degree: int = Field(default=7, ge=0)
    regularization: Optional[float] = Field(default=None, ge=0.0)
    n_iter: int = Field(default=40, ge=1)
    n_test: Optional[int] = Field(default=None, ge=1)
    scaling: float = 1.0

    @field_validator("nc_list", "m_list")
    @classmethod
    def _positive_sizes(cls, values: Optional[list[int]]) -> Optional[list[int]]:
        if values is not None and any(v < 1 for v in values):
            raise ValueError("sizes must be positive")
        return values

    @model_validator(mode="before")
    @classmethod
    def _fill_defaults(cls, data: Any) -> Any:
        if not isinstance(data, Mapping):
            return data
        resolved = dict(data)
        protocol = resolved.get("protocol")
        noise = resolved.get("noise")
        if resolved.get("regularization") is None and protocol in _DEFAULT_REGULARIZATION:
            resolved["regularization"] = _DEFAULT_REGULARIZATION[protocol]
        if resolved.get("n_shots") is None and noise in ("shot", "reset_shot"):
            resolved["n_shots"] = DEFAULT_SHOTS
        if resolved.get("n_test") is None and protocol == "two_phase":
            resolved["n_test"] = RESET_SHOT_N_TEST if noise == "reset_shot" else DEFAULT_N_TEST
        if resolved.get("m_list") is None and protocol == "blind_two_phase":
            resolved["m_list"] = [BLIND_TRAINING_SIZE]
        return resolved

    @model_validator(mode="after")
    def _check_consistency(self) -> ExperimentSpec:
        if self.protocol in ("two_phase", "blind_two_phase") and not self.m_list:
            raise ValueError(f"{self.protocol} needs m_list")
        if self.protocol in ("single_c", "blind_single_c") and self.m_list:
            raise ValueError(f"{self.protocol} does not use m_list")
        if self.noise == "ideal" and self.n_shots is not None:
            raise ValueError("the ideal condition takes no n_shots")
        return self

    @property
    def label(self) -> str:
        return str(self.id)

    @property
    def is_iterative(self) -> bool:
        return self.protocol in ITERATIVE_PROTOCOLS

    def reservoir_config(self) -> ReservoirConfig:
        return ReservoirConfig.for_condition(
            self.num_qubits,
            self.noise,
            n_shots=self.n_shots or DEFAULT_SHOTS,
            scaling=self.scaling,
        )

    def resolve(self, **overrides: Any) -> ExperimentSpec:
        """A new validated spec with `overrides` applied."""
        data = self.model_dump()
        data.update(overrides)
        return build_spec(data)

    def cell_count(self) -> int:
        m_values = len(self.m_list) if self.m_list else 1
        return self.seeds * self.trials * len(self.nc_list) * m_values

    def expected_record_count(self) -> int:
        """One record per iteration for iterative protocols, one per cell for two-phase."""
        return self.cell_count() * (self.n_iter if self.is_iterative else 1)


def build_spec(data: Mapping[str, Any]) -> ExperimentSpec:
    """Validate a mapping into an `ExperimentSpec`, raising `ConfigurationError` if invalid."""
    try:
        return ExperimentSpec.model_validate(dict(data))
    except ValidationError as e:
        raise ConfigurationError(f"Invalid experiment spec; {e}") from e


@dataclass(frozen=True)
class ResultRecord:
    """One measured point of an experiment: an ALS iteration, or a two-phase (Nc, M) cell."""

    experiment: str
    seed: int
    trial: int
    nc: int
    m: int | None
    iteration: int | None
    mse_path1: float
    mse_path2: float
    loss: float
    wall_time_s: float

    def __post_init__(self) -> None:
        if min(self.mse_path1, self.mse_path2, self.loss) < 0.0:
            raise DataError(f"negative MSE in record {self}")

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (
            self.seed,
            self.trial,
            self.nc,
            -1 if self.m is None else self.m,
            -1 if self.iteration is None else self.iteration,
        )
