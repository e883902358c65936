from .errors import (
    FlexArmError,
    ConfigurationError,
    ContractViolation,
    EmptyLogError,
    UsageError,
    IntegrationBlowupError,
    EpisodeAbortedError,
)

__all__ = [
    "FlexArmError",
    "ConfigurationError",
    "ContractViolation",
    "EmptyLogError",
    "UsageError",
    "IntegrationBlowupError",
    "EpisodeAbortedError",
]
