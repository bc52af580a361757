import math

import numpy as np
import pytest
import scipy.integrate
import scipy.stats

from qralab.exceptions import ConfigurationError, DataError
from qralab.harness.validation import brute_force_wilcoxon_p
from qralab.stats import (
    PairedSample,
    aggregate_seed,
    bonferroni_threshold,
    cohens_dz,
    log10_seed_values,
    paired_t_test,
    significance_marker,
    student_t_two_sided_p,
    wilcoxon_signed_rank,
)


class TestAggregation:
    """Tests for per-seed aggregation"""

    def test_mean_of_equal_trials(self):
        assert aggregate_seed([1e-3, 1e-3, 1e-3]) == pytest.approx(1e-3)

    def test_arithmetic_mean(self):
        assert aggregate_seed([1e-2, 2e-2, 3e-2]) == pytest.approx(2e-2)

    def test_empty(self):
        with pytest.raises(DataError):
            aggregate_seed([])

    def test_log10(self):
        np.testing.assert_allclose(log10_seed_values([1e-3, 1e-2, 1.0]), [-3.0, -2.0, 0.0])

    def test_log10_rejects_zero(self):
        with pytest.raises(DataError):
            log10_seed_values([1e-3, 0.0])


class TestPairedSample:
    """Tests for paired sample validation"""

    def test_unequal_lengths(self):
        with pytest.raises(DataError):
            PairedSample(a=np.zeros(3), b=np.zeros(4))

    def test_single_pair(self):
        with pytest.raises(DataError):
            PairedSample(a=np.zeros(1), b=np.zeros(1))

    def test_non_finite(self):
        with pytest.raises(DataError):
            PairedSample(a=np.array([0.0, np.inf]), b=np.zeros(2))

    def test_differences(self):
        sample = PairedSample(a=np.array([3.0, 1.0]), b=np.array([1.0, 1.5]))
        assert sample.n == 2
        np.testing.assert_array_equal(sample.differences, [2.0, -0.5])


class TestPairedTTest:
    """Tests for the two-tailed paired t-test"""

    def test_identical_samples(self):
        a = np.array([-3.0, -2.5, -2.9, -3.3])
        result = paired_t_test(PairedSample(a=a, b=a.copy()))
        assert result.statistic == 0.0
        assert result.p_value == 1.0
        assert not result.degenerate_variance

    def test_constant_nonzero_difference(self):
        result = paired_t_test(PairedSample(a=np.full(4, 2.0), b=np.ones(4)))
        assert result.degenerate_variance
        assert result.statistic == math.inf
        assert result.p_value == 0.0
        assert result.degrees_of_freedom == 3

    def test_p_value_against_quadrature(self):
        for t, df in [(0.7, 3), (2.1, 9), (-4.5, 39)]:
            tail, _ = scipy.integrate.quad(
                scipy.stats.t.pdf, abs(t), np.inf, args=(df,), epsabs=1e-13
            )
            assert student_t_two_sided_p(t, df) == pytest.approx(2.0 * tail, abs=1e-6)

    def test_against_scipy(self, rng):
        a = rng.normal(-3.0, 0.3, size=40)
        b = a + rng.normal(0.1, 0.2, size=40)
        ours = paired_t_test(PairedSample(a=a, b=b))
        reference = scipy.stats.ttest_rel(a, b)
        assert ours.statistic == pytest.approx(reference.statistic, rel=1e-9)
        assert ours.p_value == pytest.approx(reference.pvalue, rel=1e-7)

    def test_bad_degrees_of_freedom(self):
        with pytest.raises(ConfigurationError):
            student_t_two_sided_p(1.0, 0)


class TestWilcoxon:
    """Tests for the signed-rank test"""

    def test_symmetric_differences(self):
        result = wilcoxon_signed_rank(PairedSample(a=np.array([0.5, -0.5]), b=np.zeros(2)))
        assert result.p_value == 1.0

    def test_four_positive_differences(self):
        result = wilcoxon_signed_rank(
            PairedSample(a=np.array([1.0, 2.0, 3.0, 4.0]), b=np.zeros(4))
        )
        assert result.exact
        assert result.statistic == 0.0
        assert result.p_value == pytest.approx(0.125)

    def test_all_zero_differences(self):
        a = np.array([1.0, 2.0, 3.0])
        result = wilcoxon_signed_rank(PairedSample(a=a, b=a.copy()))
        assert result.all_zero
        assert result.n_used == 0
        assert result.p_value == 1.0

    def test_zero_differences_are_dropped(self):
        result = wilcoxon_signed_rank(
            PairedSample(a=np.array([1.0, 0.0, 2.0, -0.5]), b=np.zeros(4))
        )
        assert result.n_used == 3

    def test_exact_against_scipy_without_ties(self, rng):
        for n in (5, 9, 14, 20):
            a = rng.normal(size=n)
            b = a + rng.normal(0.3, 1.0, size=n)
            ours = wilcoxon_signed_rank(PairedSample(a=a, b=b))
            reference = scipy.stats.wilcoxon(a, b, method="exact")
            assert ours.exact
            assert ours.statistic == reference.statistic
            assert ours.p_value == pytest.approx(reference.pvalue, rel=1e-9)

    def test_exact_with_ties_against_enumeration(self):
        d = np.array([0.5, -0.5, 1.0, 1.0, 2.0, -3.0, 0.5, 4.0, 1.0])
        result = wilcoxon_signed_rank(PairedSample(a=d, b=np.zeros(d.size)))
        assert result.p_value == pytest.approx(brute_force_wilcoxon_p(d), abs=1e-12)

    def test_normal_approximation_against_scipy(self, rng):
        a = rng.normal(size=30)
        b = a + rng.normal(0.2, 1.0, size=30)
        ours = wilcoxon_signed_rank(PairedSample(a=a, b=b))
        reference = scipy.stats.wilcoxon(a, b, method="approx", correction=False)
        assert not ours.exact
        assert ours.p_value == pytest.approx(reference.pvalue, rel=1e-9)


def test_cohens_dz():
    sample = PairedSample(a=np.array([1.0, 2.0, 3.0]), b=np.zeros(3))
    assert cohens_dz(sample) == pytest.approx(2.0)
    assert cohens_dz(PairedSample(a=np.ones(3), b=np.ones(3))) == 0.0


def test_bonferroni():
    assert bonferroni_threshold(0.05, 10) == pytest.approx(0.005)
    with pytest.raises(ConfigurationError):
        bonferroni_threshold(0.05, 0)


@pytest.mark.parametrize(
    ("p_value", "marker"), [(0.001, "**"), (0.004, "**"), (0.01, "*"), (0.2, "n.s.")]
)
def test_significance_marker(p_value, marker):
    assert significance_marker(p_value, alpha=0.05, comparisons=10) == marker
