"""
单输入单隐层高斯径向基网络
以滑模变量 s 为输入估计集总不确定项 d̂ = wᵀψ(s)，权值按 ẇ = ν·s·ψ 在线更新
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..config import NetworkSettings
from ..core.errors import ContractViolation


@dataclass(frozen=True, eq=False)
class NetworkState:
    """网络参数；中心与宽度固定，只有权值随时间变化"""
    weights: np.ndarray
    centers: np.ndarray
    width: float
    nu: float

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float)
        centers = np.asarray(self.centers, dtype=float)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "centers", centers)

        if centers.ndim != 1 or centers.size < 1:
            raise ContractViolation("至少需要一个神经元")
        if weights.shape != centers.shape:
            raise ContractViolation(f"权值个数 {weights.size} 与中心个数 {centers.size} 不一致")
        if np.any(np.diff(centers) <= 0):
            raise ContractViolation("中心必须严格递增")
        if self.width <= 0:
            raise ContractViolation(f"width 必须为正，得到 {self.width}")
        if self.nu <= 0:
            raise ContractViolation(f"nu 必须为正，得到 {self.nu}")
        if not np.all(np.isfinite(weights)):
            raise ContractViolation("权值包含非有限值")

    @property
    def n(self) -> int:
        return int(self.centers.size)

    @property
    def weight_norm(self) -> float:
        return float(np.linalg.norm(self.weights))


def create_network(config: Optional[NetworkSettings] = None) -> NetworkState:
    """按配置创建网络，权值缺省全零"""
    config = config or NetworkSettings()
    centers = np.array(config.resolved_centers(), dtype=float)
    if config.initial_weights is None:
        weights = np.zeros_like(centers)
    else:
        weights = np.array(config.initial_weights, dtype=float)
    return NetworkState(weights=weights, centers=centers, width=config.resolved_width(), nu=config.nu)


def activations(s: float, net: NetworkState) -> np.ndarray:
    """ψ_i = exp(−(s − c_i)² / (2σ²))"""
    return np.exp(-((s - net.centers) ** 2) / (2.0 * net.width ** 2))


def forward(net: NetworkState, psi: Sequence[float]) -> float:
    psi = np.asarray(psi, dtype=float)
    if psi.shape != net.weights.shape:
        raise ContractViolation(f"激活向量长度 {psi.size} 与神经元个数 {net.n} 不一致")
    return float(net.weights @ psi)


def update(net: NetworkState, s: float, psi: Sequence[float], dt: float) -> NetworkState:
    """显式 Euler: w′ = w + ν·s·ψ·Δt"""
    if dt <= 0:
        raise ContractViolation(f"步长必须为正，得到 {dt}")
    psi = np.asarray(psi, dtype=float)
    if psi.shape != net.weights.shape:
        raise ContractViolation(f"激活向量长度 {psi.size} 与神经元个数 {net.n} 不一致")
    return NetworkState(
        weights=net.weights + net.nu * s * psi * dt,
        centers=net.centers,
        width=net.width,
        nu=net.nu,
    )
