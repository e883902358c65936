"""
滑模控制核心
跟踪误差、滑模变量 s、参考项导数 ṡ_r、饱和函数与控制律
"""

from dataclasses import dataclass

import numpy as np

from ..config import ControllerGains
from ..estimation import DifferentiatorState, TipEstimatorState
from ..plant import PlantState


@dataclass(frozen=True)
class ReferenceState:
    """期望轨迹；末端期望 φ_d 及其各阶导数恒为零"""
    theta_d: float = 0.0
    theta_d_dot: float = 0.0
    theta_d_ddot: float = 0.0
    theta_d_dddot: float = 0.0

    # 末端不跟踪任何运动，只抑制振动
    phi_d_ddot = 0.0
    phi_d_dddot = 0.0


@dataclass(frozen=True)
class TrackingErrors:
    e_theta: float = 0.0
    e_theta_dot: float = 0.0
    e_theta_ddot: float = 0.0
    e_phi: float = 0.0
    e_phi_dot: float = 0.0
    e_phi_ddot: float = 0.0


def errors_from_estimates(
    theta_meas: float,
    hub: DifferentiatorState,
    tip: TipEstimatorState,
    ref: ReferenceState,
) -> TrackingErrors:
    """由编码器读数与观测器状态组成误差，实际硬件可获得的信号"""
    return TrackingErrors(
        e_theta=theta_meas - ref.theta_d,
        e_theta_dot=hub.z1 - ref.theta_d_dot,
        e_theta_ddot=hub.z2 - ref.theta_d_ddot,
        e_phi=tip.phi_hat,
        e_phi_dot=tip.phi_dot_hat,
        e_phi_ddot=tip.phi_ddot_hat,
    )


def errors_from_truth(
    state: PlantState,
    theta_ddot: float,
    phi_ddot: float,
    ref: ReferenceState,
) -> TrackingErrors:
    """由真值状态组成误差，仅用于分析模式"""
    return TrackingErrors(
        e_theta=state.theta - ref.theta_d,
        e_theta_dot=state.theta_dot - ref.theta_d_dot,
        e_theta_ddot=theta_ddot - ref.theta_d_ddot,
        e_phi=state.phi,
        e_phi_dot=state.phi_dot,
        e_phi_ddot=phi_ddot,
    )


def sliding_variable(err: TrackingErrors, g: ControllerGains) -> float:
    """s = α_a·ë_θ + 2λ_a·ė_θ + λ_a²·e_θ + α_u·ë_φ + 2λ_u·ė_φ + λ_u²·e_φ"""
    return (
        g.alpha_a * err.e_theta_ddot
        + 2.0 * g.lambda_a * err.e_theta_dot
        + g.lambda_a ** 2 * err.e_theta
        + g.alpha_u * err.e_phi_ddot
        + 2.0 * g.lambda_u * err.e_phi_dot
        + g.lambda_u ** 2 * err.e_phi
    )


def s_r_dot(err: TrackingErrors, ref: ReferenceState, g: ControllerGains) -> float:
    """ṡ_r = −α_a·θ⃛_d + 2λ_a·ë_θ + λ_a²·ė_θ − α_u·φ⃛_d + 2λ_u·ë_φ + λ_u²·ė_φ"""
    return (
        -g.alpha_a * ref.theta_d_dddot
        + 2.0 * g.lambda_a * err.e_theta_ddot
        + g.lambda_a ** 2 * err.e_theta_dot
        - g.alpha_u * ref.phi_d_dddot
        + 2.0 * g.lambda_u * err.e_phi_ddot
        + g.lambda_u ** 2 * err.e_phi_dot
    )


def saturation(x: float) -> float:
    return float(np.clip(x, -1.0, 1.0))


def switching_term(s: float, g: ControllerGains) -> float:
    """κ·sat(s/φ_bl)"""
    return g.kappa * saturation(s / g.phi_bl)


def control_law(s: float, s_r_dot: float, d_hat: float, g: ControllerGains) -> float:
    """u = −(f̂_s + d̂ + ṡ_r + κ·sat(s/φ_bl)) / M̂_s"""
    return -(g.f_s_hat + d_hat + s_r_dot + switching_term(s, g)) / g.m_s_hat


def adaptive_update(d_hat: float, s: float, nu: float, dt: float) -> float:
    """标量自适应基线 d̂′ = d̂ + ν·s·Δt"""
    if dt <= 0:
        raise ValueError(f"步长必须为正，得到 {dt}")
    if nu <= 0:
        raise ValueError(f"学习率必须为正，得到 {nu}")
    return d_hat + nu * s * dt
