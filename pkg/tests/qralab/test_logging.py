import logging

import pytest

import qralab
from qralab import _debug
from qralab.logger import logger


def test_package_logger_name():
    assert logger is logging.getLogger("qralab")


def test_enable_verbose_stdout_logging(capsys):
    qralab.enable_verbose_stdout_logging()
    assert logger.level == logging.DEBUG
    logging.getLogger("qralab.solvers.ridge").debug("visible")
    assert "visible" in capsys.readouterr().out


@pytest.mark.parametrize(
    ("value", "expected"), [("1", True), ("true", True), ("TRUE", True), ("0", False), ("", False)]
)
def test_debug_flag(monkeypatch, value, expected):
    monkeypatch.setenv("QRALAB_TEST_FLAG", value)
    assert _debug._debug_flag_enabled("QRALAB_TEST_FLAG") is expected


def test_debug_flag_unset(monkeypatch):
    monkeypatch.delenv("QRALAB_TEST_FLAG", raising=False)
    assert not _debug._debug_flag_enabled("QRALAB_TEST_FLAG")


@pytest.mark.parametrize(("value", "expected"), [("4", 4), ("0", 1), ("many", 3), (" ", 3)])
def test_thread_count_from_env(monkeypatch, value, expected):
    monkeypatch.setenv("QRALAB_TEST_THREADS", value)
    assert _debug._int_from_env("QRALAB_TEST_THREADS", 3) == expected
