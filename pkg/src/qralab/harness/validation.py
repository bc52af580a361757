"""Property suites run by `qralab validate`."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import scipy.stats

from ..exceptions import QraLabException
from ..quantum import (
    MixedState,
    apply_reset_channel,
    kraus_completeness,
    reset_kraus_operators,
)
from ..reservoir import NoiseProfile, ReservoirConfig, apply_shot_noise, run_sequence
from ..stats import PairedSample, wilcoxon_signed_rank
from .csv_io import format_csv
from .models import build_spec
from .runner import run_experiment

# Set up logger
logger = logging.getLogger("qralab.harness.validation")

VALIDATION_SEED = 7


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_density_matrix(num_qubits: int, rng: np.random.Generator) -> MixedState:
    dim = 1 << num_qubits
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return MixedState(rho=rho / np.trace(rho), num_qubits=num_qubits)


def brute_force_wilcoxon_p(differences: np.ndarray) -> float:
    """Two-tailed signed-rank p by flipping every sign, for small n."""
    d = differences[differences != 0.0]
    n = d.size
    if n == 0:
        return 1.0
    ranks = scipy.stats.rankdata(np.abs(d))
    observed = ranks[d > 0].sum()
    signs = np.array(list(itertools.product((0, 1), repeat=n)), dtype=bool)
    sums = np.array([ranks[mask].sum() for mask in signs])
    lower = np.mean(sums <= observed + 1e-9)
    upper = np.mean(sums >= observed - 1e-9)
    return float(min(1.0, 2.0 * min(lower, upper)))


def check_kraus_completeness() -> CheckResult:
    worst = max(kraus_completeness(reset_kraus_operators(p)) for p in np.linspace(0, 1, 101))
    return CheckResult("kraus completeness", worst <= 1e-15, f"max deviation {worst:.2e}")


def check_trace_preservation(applications: int = 1000) -> CheckResult:
    rng = np.random.default_rng(VALIDATION_SEED)
    worst = 0.0
    for _ in range(applications):
        nq = int(rng.integers(1, 4))
        state = random_density_matrix(nq, rng)
        apply_reset_channel(state, int(rng.integers(nq)), float(rng.uniform()))
        worst = max(worst, abs(complex(np.trace(state.rho)) - 1.0))
    return CheckResult("CPTP trace preservation", worst <= 1e-12, f"max |tr - 1| {worst:.2e}")


def check_pure_mixed_agreement() -> CheckResult:
    rng = np.random.default_rng(VALIDATION_SEED)
    worst = 0.0
    for nq in (1, 2, 3):
        inputs = rng.uniform(-1, 1, size=4)
        profile = NoiseProfile.constant(nq, 0.0)
        pure = run_sequence(inputs, profile, ReservoirConfig(num_qubits=nq))
        mixed = run_sequence(inputs, profile, ReservoirConfig(num_qubits=nq, mode="mixed"))
        worst = max(worst, float(np.max(np.abs(pure - mixed))))
    return CheckResult("pure/mixed agreement at p=0", worst <= 1e-12, f"max diff {worst:.2e}")


def check_shot_noise_variance(draws: int = 100_000, n_shots: int = 1000) -> CheckResult:
    rng = np.random.default_rng(VALIDATION_SEED)
    worst = 0.0
    for value in (0.0, 0.5, -0.5, 0.9, -0.9):
        features = np.column_stack([np.full(draws, value), np.ones(draws)])
        estimates = apply_shot_noise(features, n_shots, rng)[:, 0]
        expected = (1.0 - value**2) / n_shots
        worst = max(worst, abs(float(estimates.var()) / expected - 1.0))
    return CheckResult("shot-noise variance law", worst <= 0.10, f"max rel. error {worst:.3f}")


def check_exact_wilcoxon() -> CheckResult:
    rng = np.random.default_rng(VALIDATION_SEED)
    worst = 0.0
    for n in range(2, 11):
        for _ in range(5):
            a = rng.normal(size=n)
            b = a - np.round(rng.normal(0.3, 1.0, size=n), 1)
            p = wilcoxon_signed_rank(PairedSample(a=a, b=b)).p_value
            worst = max(worst, abs(p - brute_force_wilcoxon_p(a - b)))
    return CheckResult("exact Wilcoxon vs brute force", worst <= 1e-12, f"max diff {worst:.2e}")


def check_csv_determinism() -> CheckResult:
    spec = build_spec(
        {
            "id": "determinism",
            "protocol": "single_c",
            "noise": "shot",
            "num_qubits": 3,
            "seeds": 2,
            "trials": 2,
            "nc_list": [3, 4],
            "n_iter": 3,
        }
    )
    outputs = {
        format_csv(run_experiment(spec, threads=threads, timing=False))
        for threads in (1, 2, 1)
    }
    return CheckResult(
        "CSV determinism across runs and thread counts",
        len(outputs) == 1,
        f"{len(outputs)} distinct output(s)",
    )


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_kraus_completeness,
    check_trace_preservation,
    check_pure_mixed_agreement,
    check_shot_noise_variance,
    check_exact_wilcoxon,
    check_csv_determinism,
)


def validate() -> list[CheckResult]:
    """Run every property suite. A check that raises is reported as failed."""
    results = []
    for check in CHECKS:
        try:
            result = check()
        except QraLabException as e:
            result = CheckResult(check.__name__, False, e.message)
        logger.info("%s: %s (%s)", result.name, "ok" if result.passed else "FAILED", result.detail)
        results.append(result)
    return results
