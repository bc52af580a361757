from .circuit import FeatureMatrix, extract_features, feature_labels, reservoir_step, run_sequence
from .config import (
    DEFAULT_SHOTS,
    NoiseCondition,
    ReservoirConfig,
    ShotRecord,
    default_entangle_pairs,
    feature_dimension,
)
from .noise import NoiseProfile, noise_parameter_count, profile_summary, sample_noise_profile
from .shots import FeatureSampler, apply_shot_noise, predicted_shot_variance

__all__ = [
    "DEFAULT_SHOTS",
    "FeatureMatrix",
    "FeatureSampler",
    "NoiseCondition",
    "NoiseProfile",
    "ReservoirConfig",
    "ShotRecord",
    "apply_shot_noise",
    "default_entangle_pairs",
    "extract_features",
    "feature_dimension",
    "feature_labels",
    "noise_parameter_count",
    "predicted_shot_variance",
    "profile_summary",
    "reservoir_step",
    "run_sequence",
    "sample_noise_profile",
]
