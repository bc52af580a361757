"""Per-seed aggregation and paired significance tests on log10(MSE)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import scipy.special
import scipy.stats

from .exceptions import ConfigurationError, DataError

FloatArray = npt.NDArray[np.float64]

EXACT_WILCOXON_MAX_N = 20


@dataclass(frozen=True, eq=False)
class PairedSample:
    """One value per seed under condition A and under condition B."""

    a: FloatArray
    b: FloatArray

    def __post_init__(self) -> None:
        a = np.asarray(self.a, dtype=np.float64).reshape(-1)
        b = np.asarray(self.b, dtype=np.float64).reshape(-1)
        if a.size != b.size:
            raise DataError(f"paired sample has unequal lengths {a.size} and {b.size}")
        if a.size < 2:
            raise DataError(f"paired sample needs at least 2 pairs, got {a.size}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise DataError("paired sample contains non-finite values")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return int(self.a.size)

    @property
    def differences(self) -> FloatArray:
        return self.a - self.b


@dataclass(frozen=True)
class TTestResult:
    statistic: float
    p_value: float
    degrees_of_freedom: int
    degenerate_variance: bool = False
    """All differences are equal and non-zero; the statistic is infinite and p is reported as 0."""


@dataclass(frozen=True)
class WilcoxonResult:
    statistic: float
    """min(W+, W-) over the non-zero differences."""

    p_value: float
    n_used: int
    """Pairs left after dropping zero differences."""

    exact: bool
    all_zero: bool = False


def aggregate_seed(mse_per_trial: npt.ArrayLike) -> float:
    """Arithmetic mean of the trial MSEs of one seed."""
    values = np.asarray(mse_per_trial, dtype=np.float64).reshape(-1)
    if values.size == 0:
        raise DataError("cannot aggregate an empty list of trials")
    return float(values.mean())


def log10_seed_values(mse_per_seed: npt.ArrayLike) -> FloatArray:
    values = np.asarray(mse_per_seed, dtype=np.float64).reshape(-1)
    if np.any(values <= 0.0) or not np.all(np.isfinite(values)):
        raise DataError("log10 needs finite positive MSE values")
    return np.log10(values)


def student_t_two_sided_p(statistic: float, degrees_of_freedom: int) -> float:
    """P(|T| >= |t|) for Student's t, through the regularized incomplete beta function."""
    if degrees_of_freedom < 1:
        raise ConfigurationError(f"degrees of freedom must be >= 1, got {degrees_of_freedom}")
    if math.isinf(statistic):
        return 0.0
    nu = float(degrees_of_freedom)
    x = nu / (nu + statistic * statistic)
    return float(min(1.0, scipy.special.betainc(0.5 * nu, 0.5, x)))


def paired_t_test(sample: PairedSample) -> TTestResult:
    """Two-tailed paired t-test on A - B with n - 1 degrees of freedom."""
    d = sample.differences
    df = sample.n - 1
    mean = float(d.mean())
    sd = float(d.std(ddof=1))
    if sd == 0.0:
        if mean == 0.0:
            return TTestResult(statistic=0.0, p_value=1.0, degrees_of_freedom=df)
        return TTestResult(
            statistic=math.copysign(math.inf, mean),
            p_value=0.0,
            degrees_of_freedom=df,
            degenerate_variance=True,
        )
    t = mean / (sd / math.sqrt(sample.n))
    return TTestResult(statistic=t, p_value=student_t_two_sided_p(t, df), degrees_of_freedom=df)


def _signed_rank_distribution(doubled_ranks: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
    """Number of sign assignments giving each value of 2 W+, counted by subset-sum DP."""
    counts = np.zeros(int(doubled_ranks.sum()) + 1, dtype=np.int64)
    counts[0] = 1
    for rank in doubled_ranks:
        shifted = counts.copy()
        shifted[rank:] += counts[: counts.size - rank]
        counts = shifted
    return counts


def wilcoxon_signed_rank(
    sample: PairedSample, exact_max_n: int = EXACT_WILCOXON_MAX_N
) -> WilcoxonResult:
    """Two-tailed Wilcoxon signed-rank test, zero differences dropped.

    Up to `exact_max_n` pairs the null distribution is enumerated exactly, ties included. Above
    that the normal approximation with tie correction is used.
    """
    d = sample.differences
    d = d[d != 0.0]
    n = int(d.size)
    if n == 0:
        return WilcoxonResult(statistic=0.0, p_value=1.0, n_used=0, exact=True, all_zero=True)

    ranks = scipy.stats.rankdata(np.abs(d))
    w_plus = float(ranks[d > 0].sum())
    w_minus = float(ranks[d < 0].sum())
    statistic = min(w_plus, w_minus)

    if n <= exact_max_n:
        doubled = np.rint(2.0 * ranks).astype(np.int64)
        counts = _signed_rank_distribution(doubled)
        observed = int(doubled[d > 0].sum())
        total = float(2**n)
        lower = counts[: observed + 1].sum() / total
        upper = counts[observed:].sum() / total
        p = min(1.0, 2.0 * min(lower, upper))
        return WilcoxonResult(statistic=statistic, p_value=float(p), n_used=n, exact=True)

    mean = n * (n + 1) / 4.0
    _, tie_counts = np.unique(ranks, return_counts=True)
    variance = n * (n + 1) * (2 * n + 1) / 24.0 - float(np.sum(tie_counts**3 - tie_counts)) / 48.0
    z = (w_plus - mean) / math.sqrt(variance)
    p = min(1.0, 2.0 * float(scipy.stats.norm.sf(abs(z))))
    return WilcoxonResult(statistic=statistic, p_value=p, n_used=n, exact=False)


def cohens_dz(sample: PairedSample) -> float:
    """Mean difference over the standard deviation of the differences."""
    d = sample.differences
    sd = float(d.std(ddof=1))
    mean = float(d.mean())
    if sd == 0.0:
        return 0.0 if mean == 0.0 else math.copysign(math.inf, mean)
    return mean / sd


def bonferroni_threshold(alpha: float, comparisons: int) -> float:
    if comparisons < 1 or not 0.0 < alpha < 1.0:
        raise ConfigurationError(f"invalid alpha {alpha} or comparison count {comparisons}")
    return alpha / comparisons


def significance_marker(p_value: float, alpha: float = 0.05, comparisons: int = 1) -> str:
    """`**` below the Bonferroni threshold, `*` below alpha, `n.s.` otherwise."""
    if p_value < bonferroni_threshold(alpha, comparisons):
        return "**"
    if p_value < alpha:
        return "*"
    return "n.s."
