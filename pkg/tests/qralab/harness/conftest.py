from __future__ import annotations

import pytest

from qralab.harness import ExperimentSpec

from .helpers import tiny_spec


@pytest.fixture
def single_c_spec() -> ExperimentSpec:
    return tiny_spec(noise="shot", n_shots=200)


@pytest.fixture
def two_phase_spec() -> ExperimentSpec:
    return tiny_spec(
        id="tiny-tp", protocol="two_phase", nc_list=[3], m_list=[4, 6], n_test=2, poly_degree=2
    )
