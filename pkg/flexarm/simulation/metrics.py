"""
性能指标
ITAE、RMSE 以及趋近条件、末端振动、控制抖振等汇总
"""

from typing import Sequence

import numpy as np

from ..control import reaching_diagnostic
from ..core.errors import EmptyLogError
from .records import EpisodeLog, EpisodeSummary


def _require_samples(log: EpisodeLog):
    if len(log) == 0:
        raise EmptyLogError("回合记录为空")


def _tail(values: np.ndarray) -> np.ndarray:
    """后 50% 的样本"""
    return values[len(values) // 2:]


def itae(log: EpisodeLog) -> float:
    """
    ∫ t·|e_θ(t)| dt，梯形积分

    积分区间为记录覆盖的 [t_0, t_last]；回合记录止于 T − dt，不外推到 T。
    """
    _require_samples(log)
    t = log["t"]
    return float(np.trapezoid(t * np.abs(log["e_theta"]), t))


def rmse(values: Sequence[float]) -> float:
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise EmptyLogError("序列为空")
    return float(np.sqrt(np.mean(values ** 2)))


def max_abs_s_tail(log: EpisodeLog) -> float:
    _require_samples(log)
    return float(np.max(np.abs(_tail(log["s"]))))


def tip_rms_tail(log: EpisodeLog) -> float:
    _require_samples(log)
    return rmse(_tail(log["phi"]))


def control_variation(log: EpisodeLog) -> float:
    """Σ|Δu|，抖振程度"""
    _require_samples(log)
    return float(np.sum(np.abs(np.diff(log["u"]))))


def summarize(
    log: EpisodeLog,
    phi_bl: float,
    eta: float,
    final_weight_norm: float,
    true_m_s: float,
) -> EpisodeSummary:
    _require_samples(log)
    reaching = reaching_diagnostic(log["s"], log.dt, phi_bl, eta)
    return EpisodeSummary(
        itae=itae(log),
        rmse_theta=rmse(log["e_theta"]),
        max_abs_s_tail=max_abs_s_tail(log),
        reaching_fraction=reaching.fraction,
        reaching_samples=reaching.outside_count,
        final_weight_norm=final_weight_norm,
        tip_rms_tail=tip_rms_tail(log),
        control_variation=control_variation(log),
        true_m_s=true_m_s,
    )
