"""
传感器模型
编码器量化的轮毂角 + 含高斯噪声的末端绝对加速度
"""

from dataclasses import dataclass

import numpy as np

from ..config import SensorModel
from .dynamics import PlantState


@dataclass(frozen=True)
class SensorReading:
    """一次采样"""
    theta_meas: float    # rad，已量化
    tip_acc_meas: float  # rad/s²，θ̈ + φ̈ + 噪声


def make_rng(model: SensorModel, episode_seed: int = 0) -> np.random.Generator:
    """每个回合独立的随机数流，由回合种子与传感器种子共同决定"""
    return np.random.default_rng([episode_seed, model.seed])


def quantize(value: float, step: float) -> float:
    if step <= 0:
        return value
    return round(value / step) * step


def measure(
    state: PlantState,
    theta_ddot: float,
    phi_ddot: float,
    model: SensorModel,
    rng: np.random.Generator,
) -> SensorReading:
    """
    采样传感器

    噪声标准差为 0 时不消耗随机数，读数精确等于真值。
    """
    tip_acc = theta_ddot + phi_ddot
    if model.accel_noise_std > 0:
        tip_acc += float(rng.normal(0.0, model.accel_noise_std))
    return SensorReading(
        theta_meas=quantize(state.theta, model.encoder_step),
        tip_acc_meas=tip_acc,
    )
