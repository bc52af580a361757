import logging

from qralab.metrics import NoTimingMetrics, RunMetrics


class TestRunMetrics:
    """Tests for the in-memory metrics context"""

    def test_record_and_filter(self):
        metrics = RunMetrics()
        metrics.record_metric("final_loss", 0.25, {"exp": "1"})
        metrics.record_metric("runtime", 1.5, {"exp": "1"})
        assert len(metrics.get_metrics()) == 2
        assert metrics.get_metrics("final_loss") == [
            {"metric_name": "final_loss", "value": 0.25, "dimensions": {"exp": "1"}}
        ]

    def test_get_metrics_returns_a_copy(self):
        metrics = RunMetrics()
        metrics.record_metric("final_loss", 0.25, {})
        metrics.get_metrics().clear()
        assert len(metrics.get_metrics()) == 1

    def test_timer(self):
        metrics = RunMetrics()
        metrics.start_timer("cell", "a")
        assert metrics.stop_timer("cell", "a") >= 0.0
        assert metrics.timers == {}

    def test_missing_timer(self, caplog):
        with caplog.at_level(logging.WARNING, logger="qralab.metrics"):
            assert RunMetrics().stop_timer("cell", "missing") == 0.0
        assert "not found" in caplog.text


def test_no_timing_metrics_reports_zero():
    metrics = NoTimingMetrics()
    metrics.start_timer("cell", "a")
    assert metrics.stop_timer("cell", "a") == 0.0
    assert metrics.timers == {}
