from .blind import (
    BLIND_REGULARIZATION,
    RECEIVER_SHRINKAGE,
    BlindConfig,
    BlindEstimate,
    BlindTwoPhaseResult,
    SingleCBlindReceiver,
    TwoPhaseBlindReceiver,
    blind_single_c,
    blind_two_phase,
)
from .single_c import run_single_c
from .sizing import RANDOM_BASELINE_MSE, compute_d_aug, minimum_qubits, rank_condition_holds
from .two_phase import (
    ENCRYPT_REGULARIZATION,
    AugmentedFeatures,
    PerPositionDecoder,
    TwoPhaseConfig,
    TwoPhaseResult,
    augmented_features,
    encrypt,
    fit_per_position,
    two_phase_decrypt,
    two_phase_evaluate,
    two_phase_train,
)

__all__ = [
    "BLIND_REGULARIZATION",
    "ENCRYPT_REGULARIZATION",
    "RANDOM_BASELINE_MSE",
    "RECEIVER_SHRINKAGE",
    "AugmentedFeatures",
    "BlindConfig",
    "BlindEstimate",
    "BlindTwoPhaseResult",
    "PerPositionDecoder",
    "SingleCBlindReceiver",
    "TwoPhaseBlindReceiver",
    "TwoPhaseConfig",
    "TwoPhaseResult",
    "augmented_features",
    "blind_single_c",
    "blind_two_phase",
    "compute_d_aug",
    "encrypt",
    "fit_per_position",
    "minimum_qubits",
    "rank_condition_holds",
    "run_single_c",
    "two_phase_decrypt",
    "two_phase_evaluate",
    "two_phase_train",
]
