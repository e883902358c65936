from .sliding import (
    ReferenceState,
    TrackingErrors,
    errors_from_estimates,
    errors_from_truth,
    sliding_variable,
    s_r_dot,
    saturation,
    switching_term,
    control_law,
    adaptive_update,
)
from .diagnostics import ReachingReport, reaching_diagnostic, zero_dynamics_poles, zero_dynamics_stable
from .compensators import (
    TruthSignals,
    BaseCompensator,
    NeuralCompensator,
    AdaptiveCompensator,
    ExactCompensator,
    create_compensator,
    list_kinds,
)

__all__ = [
    "ReferenceState",
    "TrackingErrors",
    "errors_from_estimates",
    "errors_from_truth",
    "sliding_variable",
    "s_r_dot",
    "saturation",
    "switching_term",
    "control_law",
    "adaptive_update",
    "ReachingReport",
    "reaching_diagnostic",
    "zero_dynamics_poles",
    "zero_dynamics_stable",
    "TruthSignals",
    "BaseCompensator",
    "NeuralCompensator",
    "AdaptiveCompensator",
    "ExactCompensator",
    "create_compensator",
    "list_kinds",
]
