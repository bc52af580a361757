from __future__ import annotations

import logging

import numpy as np
import pytest


# This fixture will run before each test
@pytest.fixture(autouse=True)
def restore_qralab_logger():
    logger = logging.getLogger("qralab")
    handlers, level = list(logger.handlers), logger.level
    yield
    logger.handlers[:] = handlers
    logger.setLevel(level)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240101)
