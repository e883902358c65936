"""
不确定项补偿器
神经网络、标量自适应与真值（分析模式）三种 d̂ 来源，接线完全一致
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Type

from ..config import ControllerGains, ControllerKind, NetworkSettings
from ..core.errors import ContractViolation
from ..neural import NetworkState, activations, create_network, forward, update
from .sliding import adaptive_update, switching_term


@dataclass(frozen=True)
class TruthSignals:
    """真值模型给出的滑模动态项，仅分析模式使用"""
    drift: float
    m_s: float


class BaseCompensator(ABC):
    """补偿器基类"""

    kind: ControllerKind

    def __init__(self, gains: ControllerGains, network: NetworkSettings):
        self.gains = gains
        self.network_settings = network

    @abstractmethod
    def estimate(self, s: float, s_r_dot: float, truth: Optional[TruthSignals] = None) -> float:
        """当前步的 d̂"""
        pass

    def learn(self, s: float, dt: float):
        """施加控制后更新内部状态，供下一步使用"""
        pass

    @property
    def weight_norm(self) -> float:
        return 0.0


class NeuralCompensator(BaseCompensator):
    """d̂ = wᵀψ(s)"""

    kind = ControllerKind.INTELLIGENT

    def __init__(self, gains: ControllerGains, network: NetworkSettings):
        super().__init__(gains, network)
        self.network: NetworkState = create_network(network)
        self._psi = None

    def estimate(self, s: float, s_r_dot: float, truth: Optional[TruthSignals] = None) -> float:
        self._psi = activations(s, self.network)
        return forward(self.network, self._psi)

    def learn(self, s: float, dt: float):
        if self._psi is None:
            raise ContractViolation("learn 之前必须先调用 estimate")
        self.network = update(self.network, s, self._psi, dt)

    @property
    def weight_norm(self) -> float:
        return self.network.weight_norm


class AdaptiveCompensator(BaseCompensator):
    """标量自适应基线，学习率与网络共用"""

    kind = ControllerKind.ADAPTIVE

    def __init__(self, gains: ControllerGains, network: NetworkSettings):
        super().__init__(gains, network)
        self.d_hat = 0.0

    def estimate(self, s: float, s_r_dot: float, truth: Optional[TruthSignals] = None) -> float:
        return self.d_hat

    def learn(self, s: float, dt: float):
        self.d_hat = adaptive_update(self.d_hat, s, self.network_settings.nu, dt)

    @property
    def weight_norm(self) -> float:
        return abs(self.d_hat)


class ExactCompensator(BaseCompensator):
    """
    分析模式：用真值 drift 与 M_s 抵消全部残余不确定

    选取 d̂ 使控制律退化为 u = −(drift + ṡ_r + κ·sat(s/φ_bl)) / M_s，
    从而 ṡ = −κ·sat(s/φ_bl)。
    """

    kind = ControllerKind.EXACT

    def estimate(self, s: float, s_r_dot: float, truth: Optional[TruthSignals] = None) -> float:
        if truth is None:
            raise ContractViolation("分析模式补偿器需要真值信号")
        switching = switching_term(s, self.gains)
        scale = self.gains.m_s_hat / truth.m_s
        return scale * (truth.drift + s_r_dot + switching) - self.gains.f_s_hat - s_r_dot - switching


_COMPENSATORS: Dict[ControllerKind, Type[BaseCompensator]] = {
    ControllerKind.INTELLIGENT: NeuralCompensator,
    ControllerKind.ADAPTIVE: AdaptiveCompensator,
    ControllerKind.EXACT: ExactCompensator,
}


def create_compensator(
    kind: ControllerKind,
    gains: ControllerGains,
    network: Optional[NetworkSettings] = None,
) -> BaseCompensator:
    """根据控制器类型创建补偿器"""
    if kind not in _COMPENSATORS:
        raise ContractViolation(f"不支持的控制器类型: {kind}")
    return _COMPENSATORS[kind](gains, network or NetworkSettings())


def list_kinds() -> List[ControllerKind]:
    return list(_COMPENSATORS)
