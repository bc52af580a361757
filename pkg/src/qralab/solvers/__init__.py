from .als import AlsConfig, AlsTrace, AlsWeights, als_single_c, mse
from .ridge import ReadoutWeights, project, reservoir_project, ridge_objective, ridge_solve

__all__ = [
    "AlsConfig",
    "AlsTrace",
    "AlsWeights",
    "ReadoutWeights",
    "als_single_c",
    "mse",
    "project",
    "reservoir_project",
    "ridge_objective",
    "ridge_solve",
]
