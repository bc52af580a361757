"""Expands an experiment spec into independent cells and runs them on a worker pool."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed

from ..codec import KeySet, generate_plaintext
from ..exceptions import ConfigurationError
from ..metrics import MetricsContext, NoTimingMetrics, RunMetrics
from ..protocols import (
    BlindConfig,
    TwoPhaseConfig,
    blind_single_c,
    blind_two_phase,
    two_phase_evaluate,
)
from ..quantum import MAX_QUBITS
from ..reservoir import FeatureSampler, ReservoirConfig, sample_noise_profile
from ..solvers import AlsConfig, AlsTrace, als_single_c
from .models import ExperimentSpec, ResultRecord
from .seeds import SeedScheme

# Set up logger
logger = logging.getLogger("qralab.harness.runner")


@dataclass(frozen=True)
class Cell:
    """Coordinates of one independent protocol run."""

    seed: int
    trial: int
    nc: int
    m: int | None = None

    @property
    def resource_id(self) -> str:
        return f"seed={self.seed},trial={self.trial},nc={self.nc},m={self.m}"


def experiment_cells(spec: ExperimentSpec) -> list[Cell]:
    """All cells of `spec` in canonical order: seed, trial, Nc, then M."""
    m_values: list[int | None] = list(spec.m_list) if spec.m_list else [None]
    return [
        Cell(seed=seed, trial=trial, nc=nc, m=m)
        for seed in range(spec.seeds)
        for trial in range(spec.trials)
        for nc in spec.nc_list
        for m in m_values
    ]


def check_feasible(spec: ExperimentSpec) -> None:
    if spec.num_qubits > MAX_QUBITS:
        raise ConfigurationError(
            f"{spec.num_qubits} qubits exceeds the simulator limit of {MAX_QUBITS}"
        )


class _CellRunner:
    """Draws the keys, plaintexts, noise profiles and shot streams of a cell and runs it."""

    def __init__(self, spec: ExperimentSpec, seeds: SeedScheme, metrics: MetricsContext):
        self.spec = spec
        self.seeds = seeds
        self.metrics = metrics
        self.reservoir_config: ReservoirConfig = spec.reservoir_config()

    def _samplers(self, cell: Cell) -> tuple[FeatureSampler, FeatureSampler]:
        nq = self.spec.num_qubits
        profile_a = sample_noise_profile(
            nq, self.seeds.stream("noise_profile_a", cell.seed, cell.trial)
        )
        profile_b = sample_noise_profile(
            nq, self.seeds.stream("noise_profile_b", cell.seed, cell.trial)
        )
        m = 0 if cell.m is None else cell.m
        rng_a = self.seeds.stream("shot_noise", cell.seed, cell.trial, cell.nc, m, 0)
        rng_b = self.seeds.stream("shot_noise", cell.seed, cell.trial, cell.nc, m, 1)
        return (
            FeatureSampler(profile_a, self.reservoir_config, rng_a),
            FeatureSampler(profile_b, self.reservoir_config, rng_b),
        )

    def _keys(self, cell: Cell) -> KeySet:
        rng = self.seeds.stream("keys", cell.seed, cell.trial, cell.nc)
        return KeySet.generate(cell.nc, self.spec.num_qubits, rng)

    def _plaintexts(self, label: str, cell: Cell, count: int) -> np.ndarray:
        # Row-major fill makes the first M rows of a larger draw equal to a draw of M rows.
        rng = self.seeds.stream(label, cell.seed, cell.trial, cell.nc)
        return rng.uniform(-1.0, 1.0, size=(count, cell.nc))

    def _trace_records(
        self, cell: Cell, trace: AlsTrace, wall_time: float
    ) -> list[ResultRecord]:
        return [
            ResultRecord(
                experiment=self.spec.label,
                seed=cell.seed,
                trial=cell.trial,
                nc=cell.nc,
                m=cell.m,
                iteration=i + 1,
                mse_path1=trace.mse_path1[i],
                mse_path2=trace.mse_path2[i],
                loss=trace.loss[i],
                wall_time_s=wall_time,
            )
            for i in range(trace.n_iter)
        ]

    def __call__(self, cell: Cell) -> list[ResultRecord]:
        spec = self.spec
        self.metrics.start_timer("cell", cell.resource_id)
        sampler_a, sampler_b = self._samplers(cell)
        keys = self._keys(cell)
        regularization = spec.regularization or 0.0
        two_phase = TwoPhaseConfig(poly_degree=spec.poly_degree, regularization=regularization)
        trace: AlsTrace | None = None
        mse_path1 = mse_path2 = 0.0

        if spec.protocol in ("single_c", "blind_single_c"):
            plaintext = generate_plaintext(
                cell.nc, self.seeds.stream("plaintexts_train", cell.seed, cell.trial, cell.nc)
            )
            als = AlsConfig(n_iter=spec.n_iter, regularization=regularization)
            run = als_single_c if spec.protocol == "single_c" else blind_single_c
            trace = run(plaintext, keys, sampler_a, sampler_b, als)
        elif spec.protocol == "two_phase":
            assert cell.m is not None and spec.n_test is not None
            result = two_phase_evaluate(
                self._plaintexts("plaintexts_train", cell, cell.m),
                self._plaintexts("plaintexts_test", cell, spec.n_test),
                keys,
                sampler_a,
                sampler_b,
                two_phase,
            )
            mse_path1, mse_path2 = result.mse_path1, result.mse_path2
        else:
            assert cell.m is not None
            blind = BlindConfig(n_iter=spec.n_iter, n_train=cell.m, two_phase=two_phase)
            train = self._plaintexts("plaintexts_train", cell, cell.m)
            trace = blind_two_phase(train, keys, sampler_a, sampler_b, blind).trace

        wall_time = self.metrics.stop_timer("cell", cell.resource_id)
        dimensions = {"experiment": spec.label, "cell": cell.resource_id}
        if trace is not None:
            self.metrics.record_metric("final_loss", trace.final_loss, dimensions)
            return self._trace_records(cell, trace, wall_time)

        record = ResultRecord(
            experiment=spec.label,
            seed=cell.seed,
            trial=cell.trial,
            nc=cell.nc,
            m=cell.m,
            iteration=None,
            mse_path1=mse_path1,
            mse_path2=mse_path2,
            loss=0.5 * (mse_path1 + mse_path2),
            wall_time_s=wall_time,
        )
        self.metrics.record_metric("final_loss", record.loss, dimensions)
        return [record]


def run_experiment(
    spec: ExperimentSpec,
    seeds: SeedScheme | None = None,
    threads: int = 1,
    timing: bool = True,
    metrics: MetricsContext | None = None,
) -> list[ResultRecord]:
    """Run every cell of `spec` and return the records in canonical order.

    Each cell draws its inputs from streams keyed by its own coordinates, so the records do not
    depend on `threads` or on which cells run.

    Args:
        spec: A validated experiment spec.
        seeds: Master seed scheme. Defaults to the standard master seed.
        threads: Worker threads for the cell pool.
        timing: When False every wall time is written as 0.
        metrics: Where cell timings and final losses are recorded.

    Returns:
        One record per ALS iteration (iterative protocols) or per cell (two-phase).

    Raises:
        ConfigurationError: If the spec cannot be simulated or `threads` < 1.
    """
    check_feasible(spec)
    if threads < 1:
        raise ConfigurationError(f"threads must be at least 1, got {threads}")
    seeds = seeds or SeedScheme()
    metrics = metrics or (RunMetrics() if timing else NoTimingMetrics())
    cells = experiment_cells(spec)
    logger.info(
        "running experiment %s: %s %s, %s cells on %s thread(s)",
        spec.label,
        spec.protocol,
        spec.noise,
        len(cells),
        threads,
    )

    runner = _CellRunner(spec, seeds, metrics)
    results = Parallel(n_jobs=threads, prefer="threads")(delayed(runner)(cell) for cell in cells)
    records = sorted((r for batch in results for r in batch), key=ResultRecord.sort_key)
    logger.info("experiment %s produced %s records", spec.label, len(records))
    return records
