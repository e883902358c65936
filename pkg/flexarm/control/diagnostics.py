"""
闭环诊断
趋近条件的数值检验与滑模面零动态稳定性
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..config import ControllerGains, PlantParams
from ..core.errors import EmptyLogError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReachingReport:
    fraction: float      # 边界层外满足 s·ṡ ≤ −η|s| 的样本比例
    outside_count: int   # 边界层外的样本数


def reaching_diagnostic(s_series: Sequence[float], dt: float, phi_bl: float, eta: float) -> ReachingReport:
    """
    趋近条件 s·ṡ ≤ −η|s| 的采样检验

    ṡ 取前向差分 (s_{k+1} − s_k)/dt，最后一个样本没有差分，不计入。
    边界层外没有样本时比例记为 1.0。
    """
    s = np.asarray(s_series, dtype=float)
    if s.size == 0:
        raise EmptyLogError("s 序列为空，无法检验趋近条件")
    if dt <= 0:
        raise ValueError(f"采样周期必须为正，得到 {dt}")

    s_now = s[:-1]
    s_dot = np.diff(s) / dt
    outside = np.abs(s_now) > phi_bl
    count = int(np.count_nonzero(outside))
    if count == 0:
        return ReachingReport(fraction=1.0, outside_count=0)

    satisfied = s_now[outside] * s_dot[outside] <= -eta * np.abs(s_now[outside])
    return ReachingReport(fraction=float(np.count_nonzero(satisfied)) / count, outside_count=count)


def zero_dynamics_poles(params: PlantParams, gains: ControllerGains) -> np.ndarray:
    """
    s ≡ 0 上剩余运动的特征根

    (α_a p² + 2λ_a p + λ_a²)(m_uu p² + c_phi p + k_phi) − m_au p²(α_u p² + 2λ_u p + λ_u²)
    """
    hub = np.array([gains.alpha_a, 2.0 * gains.lambda_a, gains.lambda_a ** 2])
    tip = np.array([gains.alpha_u, 2.0 * gains.lambda_u, gains.lambda_u ** 2])
    link = np.array([params.m_uu, params.c_phi, params.k_phi])
    coupling = params.m_au * np.polymul(tip, [1.0, 0.0, 0.0])
    return np.roots(np.polysub(np.polymul(hub, link), coupling))


def zero_dynamics_stable(params: PlantParams, gains: ControllerGains) -> bool:
    poles = zero_dynamics_poles(params, gains)
    stable = bool(np.all(poles.real < 0))
    if not stable:
        logger.debug("零动态极点: %s", poles)
    return stable
