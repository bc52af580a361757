"""Significance reports and summary tables over result records."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from ..exceptions import DataError
from ..stats import (
    PairedSample,
    TTestResult,
    WilcoxonResult,
    aggregate_seed,
    bonferroni_threshold,
    cohens_dz,
    log10_seed_values,
    paired_t_test,
    significance_marker,
    wilcoxon_signed_rank,
)
from .models import ResultRecord

MSE_FLOOR = 1e-300
"""Final MSE values are floored here before taking log10, so an exact zero stays finite."""

METRICS = ("log10-final-mse",)


def final_records(records: Iterable[ResultRecord]) -> list[ResultRecord]:
    """The final measurement of every run.

    A run is one (seed, trial, Nc) for the Single-C style protocols and its last ALS iteration is
    kept. For the two-phase protocol the run spans the M grid and its largest M is kept.
    """
    best: dict[tuple[str, int, int, int], ResultRecord] = {}
    for record in records:
        key = (record.experiment, record.seed, record.trial, record.nc)
        current = best.get(key)
        if current is None or _progress(record) > _progress(current):
            best[key] = record
    return [best[key] for key in sorted(best)]


def _progress(record: ResultRecord) -> tuple[int, int]:
    return (
        -1 if record.m is None else record.m,
        -1 if record.iteration is None else record.iteration,
    )


def final_mse_per_seed(records: Iterable[ResultRecord]) -> dict[int, dict[int, float]]:
    """Nc -> seed -> trial-averaged final MSE."""
    grouped: dict[int, dict[int, list[float]]] = defaultdict(lambda: defaultdict(list))
    for record in final_records(records):
        grouped[record.nc][record.seed].append(record.loss)
    return {
        nc: {seed: aggregate_seed(values) for seed, values in sorted(per_seed.items())}
        for nc, per_seed in sorted(grouped.items())
    }


@dataclass(frozen=True)
class ComparisonRow:
    nc: int
    n_seeds: int
    mean_log10_a: float
    mean_log10_b: float
    t_test: TTestResult
    wilcoxon: WilcoxonResult
    effect_size: float


@dataclass(frozen=True)
class SignificanceReport:
    label_a: str
    label_b: str
    alpha: float
    rows: tuple[ComparisonRow, ...]

    @property
    def comparisons(self) -> int:
        return len(self.rows)

    @property
    def adjusted_alpha(self) -> float:
        return bonferroni_threshold(self.alpha, self.comparisons)

    def marker(self, p_value: float) -> str:
        return significance_marker(p_value, self.alpha, self.comparisons)

    def to_text(self) -> str:
        lines = [
            f"log10 final MSE: {self.label_a} vs {self.label_b}",
            f"alpha = {self.alpha:g}, Bonferroni alpha/m = {self.adjusted_alpha:.4g} "
            f"(m = {self.comparisons})",
            f"{'Nc':>4} {'n':>3} {'mean A':>9} {'mean B':>9} {'t':>10} {'p_t':>10} {'':>4} "
            f"{'W':>6} {'p_W':>10} {'':>4} {'d_z':>8}",
        ]
        for row in self.rows:
            t, w = row.t_test, row.wilcoxon
            p_t = "<1e-15" if t.degenerate_variance else f"{t.p_value:.3g}"
            lines.append(
                f"{row.nc:>4} {row.n_seeds:>3} {row.mean_log10_a:>9.3f} {row.mean_log10_b:>9.3f} "
                f"{t.statistic:>10.3f} {p_t:>10} {self.marker(t.p_value):>4} "
                f"{w.statistic:>6.1f} {w.p_value:>10.3g} {self.marker(w.p_value):>4} "
                f"{row.effect_size:>8.3f}"
            )
        return "\n".join(lines) + "\n"


def _label(records: Sequence[ResultRecord], fallback: str) -> str:
    names = sorted({r.experiment for r in records})
    return ",".join(names) if names else fallback


def significance_report(
    records_a: Sequence[ResultRecord],
    records_b: Sequence[ResultRecord],
    metric: str = "log10-final-mse",
    alpha: float = 0.05,
) -> SignificanceReport:
    """Paired t and Wilcoxon tests per Nc on the per-seed log10 final MSE of two experiments.

    Raises:
        DataError: If the experiments share no Nc value, or their seed sets differ at some Nc.
    """
    if metric not in METRICS:
        raise DataError(f"unknown metric {metric!r}; expected one of {METRICS}")
    per_seed_a = final_mse_per_seed(records_a)
    per_seed_b = final_mse_per_seed(records_b)
    shared = sorted(set(per_seed_a) & set(per_seed_b))
    if not shared:
        raise DataError("the two experiments have no Nc value in common")

    rows = []
    for nc in shared:
        seeds_a, seeds_b = per_seed_a[nc], per_seed_b[nc]
        if set(seeds_a) != set(seeds_b):
            raise DataError(
                f"seed sets differ at Nc={nc}: {sorted(seeds_a)} vs {sorted(seeds_b)}"
            )
        order = sorted(seeds_a)
        a = log10_seed_values(np.maximum([seeds_a[s] for s in order], MSE_FLOOR))
        b = log10_seed_values(np.maximum([seeds_b[s] for s in order], MSE_FLOOR))
        sample = PairedSample(a=a, b=b)
        rows.append(
            ComparisonRow(
                nc=nc,
                n_seeds=sample.n,
                mean_log10_a=float(a.mean()),
                mean_log10_b=float(b.mean()),
                t_test=paired_t_test(sample),
                wilcoxon=wilcoxon_signed_rank(sample),
                effect_size=cohens_dz(sample),
            )
        )
    return SignificanceReport(
        label_a=_label(records_a, "A"),
        label_b=_label(records_b, "B"),
        alpha=alpha,
        rows=tuple(rows),
    )


def summarize(records: Iterable[ResultRecord]) -> str:
    """Plain-text table of mean and standard deviation of the final MSE per (experiment, Nc, M).

    For two-phase runs every M is listed separately.
    """
    records = list(records)
    groups: dict[tuple[str, int, int], list[float]] = defaultdict(list)
    finals = [r for r in records if r.iteration is None] + [
        r for r in final_records(r for r in records if r.iteration is not None)
    ]
    for record in finals:
        m = -1 if record.m is None else record.m
        groups[(record.experiment, record.nc, m)].append(record.loss)

    lines = [f"{'experiment':>10} {'Nc':>4} {'M':>5} {'runs':>5} {'mean MSE':>12} {'sd':>12}"]
    for (experiment, nc, m), values in sorted(groups.items()):
        array = np.asarray(values)
        sd = float(array.std(ddof=1)) if array.size > 1 else 0.0
        m_text = "-" if m < 0 else str(m)
        lines.append(
            f"{experiment:>10} {nc:>4} {m_text:>5} {array.size:>5} {array.mean():>12.4e} "
            f"{sd:>12.4e}"
        )
    return "\n".join(lines) + "\n"
