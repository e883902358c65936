"""
单连杆柔性机械臂真值模型
集中参数连杆动力学 + 一阶执行器滤波，四阶 Runge-Kutta 积分
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..config import PlantParams
from ..core.errors import ConfigurationError, IntegrationBlowupError

Disturbance = Tuple[float, float]
NO_DISTURBANCE: Disturbance = (0.0, 0.0)


@dataclass(frozen=True)
class PlantState:
    """连续状态 (θ, φ, θ̇, φ̇, τ)"""
    theta: float = 0.0
    phi: float = 0.0
    theta_dot: float = 0.0
    phi_dot: float = 0.0
    tau: float = 0.0

    def to_array(self) -> np.ndarray:
        return np.array([self.theta, self.phi, self.theta_dot, self.phi_dot, self.tau])

    @classmethod
    def from_array(cls, x: np.ndarray) -> "PlantState":
        return cls(float(x[0]), float(x[1]), float(x[2]), float(x[3]), float(x[4]))

    def is_finite(self) -> bool:
        return all(math.isfinite(v) for v in (self.theta, self.phi, self.theta_dot, self.phi_dot, self.tau))


def _solve(params: PlantParams, rhs_a: float, rhs_u: float) -> Tuple[float, float]:
    """求解 M x = [rhs_a, rhs_u]ᵀ（Cramer 法则）"""
    det = params.m_aa * params.m_uu - params.m_au ** 2
    if det <= 0:
        raise ConfigurationError(f"惯性矩阵奇异或非正定: det = {det}")
    x_a = (params.m_uu * rhs_a - params.m_au * rhs_u) / det
    x_u = (params.m_aa * rhs_u - params.m_au * rhs_a) / det
    return x_a, x_u


def accelerations(
    state: PlantState,
    params: PlantParams,
    disturbance: Disturbance = NO_DISTURBANCE,
) -> Tuple[float, float]:
    """
    求解 M q̈ = bτ + p − Kq

    p 由末端粘性阻尼 −c_phi·φ̇ 与外部扰动 (d_a, d_u) 组成。

    Returns:
        (θ̈, φ̈)
    """
    d_a, d_u = disturbance
    rhs_a = state.tau + d_a
    rhs_u = -params.k_phi * state.phi - params.c_phi * state.phi_dot + d_u
    return _solve(params, rhs_a, rhs_u)


def actuator_rate(tau: float, u: float, gamma: float) -> float:
    """一阶低通执行器 τ̇ = −γ(τ − u)"""
    return -gamma * (tau - u)


def jerks(
    state: PlantState,
    u: float,
    params: PlantParams,
    disturbance: Disturbance = NO_DISTURBANCE,
) -> Tuple[float, float]:
    """
    坐标三阶导数 (θ⃛, φ⃛)

    对连杆方程求一次导数，扰动视为常值。
    """
    _, phi_ddot = accelerations(state, params, disturbance)
    tau_dot = actuator_rate(state.tau, u, params.gamma)
    rhs_u = -params.k_phi * state.phi_dot - params.c_phi * phi_ddot
    return _solve(params, tau_dot, rhs_u)


def true_control_gain(params: PlantParams, alpha_a: float, alpha_u: float) -> float:
    """真实控制增益 M_s = γ(α_a·m_uu − α_u·m_au)/Δ"""
    return params.gamma * (alpha_a * params.m_uu - alpha_u * params.m_au) / params.determinant


def sliding_terms(
    state: PlantState,
    params: PlantParams,
    alpha_a: float,
    alpha_u: float,
    disturbance: Disturbance = NO_DISTURBANCE,
) -> Tuple[float, float]:
    """
    滑模动态 ṡ = drift + ṡ_r + M_s·u 中的真值项

    Returns:
        (drift, M_s)，drift 即 f_s + d
    """
    theta_jerk, phi_jerk = jerks(state, 0.0, params, disturbance)
    drift = alpha_a * theta_jerk + alpha_u * phi_jerk
    return drift, true_control_gain(params, alpha_a, alpha_u)


def mechanical_energy(state: PlantState, params: PlantParams) -> float:
    """½q̇ᵀMq̇ + ½k_phi·φ²"""
    kinetic = 0.5 * (
        params.m_aa * state.theta_dot ** 2
        + 2 * params.m_au * state.theta_dot * state.phi_dot
        + params.m_uu * state.phi_dot ** 2
    )
    return kinetic + 0.5 * params.k_phi * state.phi ** 2


def _vector_field(
    x: np.ndarray,
    u: float,
    params: PlantParams,
    disturbance: Disturbance,
) -> np.ndarray:
    state = PlantState.from_array(x)
    theta_ddot, phi_ddot = accelerations(state, params, disturbance)
    return np.array([
        state.theta_dot,
        state.phi_dot,
        theta_ddot,
        phi_ddot,
        actuator_rate(state.tau, u, params.gamma),
    ])


def step(
    state: PlantState,
    u: float,
    params: PlantParams,
    dt: float,
    disturbance: Disturbance = NO_DISTURBANCE,
) -> PlantState:
    """
    经典四阶 Runge-Kutta 推进一步，u 在步长内保持不变

    Raises:
        IntegrationBlowupError: 结果含 NaN/Inf
    """
    if dt <= 0:
        raise ValueError(f"步长必须为正，得到 {dt}")

    x = state.to_array()
    with np.errstate(over="ignore", invalid="ignore"):
        k1 = _vector_field(x, u, params, disturbance)
        k2 = _vector_field(x + 0.5 * dt * k1, u, params, disturbance)
        k3 = _vector_field(x + 0.5 * dt * k2, u, params, disturbance)
        k4 = _vector_field(x + dt * k3, u, params, disturbance)
        x_next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    result = PlantState.from_array(x_next)
    if not result.is_finite():
        raise IntegrationBlowupError(
            f"积分发散: u={u}, dt={dt}, 状态={result}",
            state=result,
            previous=state,
        )
    return result
