import logging
import sys

from .codec import (
    KeySet,
    decode_g,
    encode_f,
    generate_key,
    generate_plaintext,
    key_length,
    offset_key_length,
)
from .exceptions import (
    ConfigurationError,
    DataError,
    DecoderStateError,
    ExperimentIOError,
    ModeError,
    QraLabException,
    QubitIndexError,
)
from .harness import (
    ExperimentSpec,
    ResultRecord,
    SeedScheme,
    emit_csv,
    preset,
    read_csv,
    run_experiment,
    significance_report,
    summarize,
)
from .metrics import MetricsContext, NoTimingMetrics, RunMetrics
from .protocols import (
    RANDOM_BASELINE_MSE,
    BlindConfig,
    PerPositionDecoder,
    TwoPhaseConfig,
    blind_single_c,
    blind_two_phase,
    compute_d_aug,
    run_single_c,
    two_phase_decrypt,
    two_phase_evaluate,
    two_phase_train,
)
from .quantum import (
    MixedState,
    PureState,
    apply_reset_channel,
    apply_rzz,
    apply_single_qubit_rotation,
    expect_z,
    expect_zz,
    init_plus,
)
from .reservoir import (
    FeatureSampler,
    NoiseProfile,
    ReservoirConfig,
    apply_shot_noise,
    run_sequence,
    sample_noise_profile,
)
from .solvers import (
    AlsConfig,
    AlsTrace,
    ReadoutWeights,
    als_single_c,
    reservoir_project,
    ridge_solve,
)
from .stats import aggregate_seed, paired_t_test, wilcoxon_signed_rank
from .version import __version__


def enable_verbose_stdout_logging() -> None:
    """Enables verbose logging to stdout. This is useful for debugging."""
    logger = logging.getLogger("qralab")
    logger.setLevel(logging.DEBUG)
    logger.addHandler(logging.StreamHandler(sys.stdout))


__all__ = [
    "RANDOM_BASELINE_MSE",
    "AlsConfig",
    "AlsTrace",
    "BlindConfig",
    "ConfigurationError",
    "DataError",
    "DecoderStateError",
    "ExperimentIOError",
    "ExperimentSpec",
    "FeatureSampler",
    "KeySet",
    "MetricsContext",
    "MixedState",
    "ModeError",
    "NoTimingMetrics",
    "NoiseProfile",
    "PerPositionDecoder",
    "PureState",
    "QraLabException",
    "QubitIndexError",
    "ReadoutWeights",
    "ReservoirConfig",
    "ResultRecord",
    "RunMetrics",
    "SeedScheme",
    "TwoPhaseConfig",
    "__version__",
    "aggregate_seed",
    "als_single_c",
    "apply_reset_channel",
    "apply_rzz",
    "apply_shot_noise",
    "apply_single_qubit_rotation",
    "blind_single_c",
    "blind_two_phase",
    "compute_d_aug",
    "decode_g",
    "emit_csv",
    "enable_verbose_stdout_logging",
    "encode_f",
    "expect_z",
    "expect_zz",
    "generate_key",
    "generate_plaintext",
    "init_plus",
    "key_length",
    "offset_key_length",
    "paired_t_test",
    "preset",
    "read_csv",
    "reservoir_project",
    "ridge_solve",
    "run_experiment",
    "run_sequence",
    "run_single_c",
    "sample_noise_profile",
    "significance_report",
    "summarize",
    "two_phase_decrypt",
    "two_phase_evaluate",
    "two_phase_train",
    "wilcoxon_signed_rank",
]
