from ..config import PlantParams, SensorModel
from .dynamics import (
    PlantState,
    Disturbance,
    NO_DISTURBANCE,
    accelerations,
    actuator_rate,
    jerks,
    true_control_gain,
    sliding_terms,
    mechanical_energy,
    step,
)
from .sensors import SensorReading, make_rng, quantize, measure

__all__ = [
    "PlantParams",
    "SensorModel",
    "PlantState",
    "Disturbance",
    "NO_DISTURBANCE",
    "accelerations",
    "actuator_rate",
    "jerks",
    "true_control_gain",
    "sliding_terms",
    "mechanical_energy",
    "step",
    "SensorReading",
    "make_rng",
    "quantize",
    "measure",
]
