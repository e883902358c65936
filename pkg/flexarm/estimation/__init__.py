from .differentiator import DifferentiatorState, init_differentiator, differentiator_step
from .tip import TipEstimatorState, tip_estimate_step

__all__ = [
    "DifferentiatorState",
    "init_differentiator",
    "differentiator_step",
    "TipEstimatorState",
    "tip_estimate_step",
]
