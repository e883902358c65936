"""
闭环回合
真值模型 → 传感器 → 观测器 → 滑模控制器 → 真值模型，1 kHz 单速率循环
"""

import logging
import math

from ..config import ControllerKind, EpisodeConfig
from ..control import (
    TruthSignals,
    control_law,
    create_compensator,
    errors_from_estimates,
    errors_from_truth,
    s_r_dot,
    sliding_variable,
    zero_dynamics_stable,
)
from ..core.errors import ContractViolation, EpisodeAbortedError, IntegrationBlowupError
from ..estimation import TipEstimatorState, differentiator_step, init_differentiator, tip_estimate_step
from ..plant import PlantState, accelerations, make_rng, measure, sliding_terms, step, true_control_gain
from .metrics import summarize
from .records import COLUMNS, EpisodeLog
from .trajectory import trajectory

logger = logging.getLogger(__name__)

GAIN_RATIO_RANGE = (0.5, 1.5)
WEIGHT_NORM_LIMIT = 1e3


def _check_design(cfg: EpisodeConfig) -> float:
    """回合开始前检查控制增益估计与零动态，返回真实 M_s"""
    gains = cfg.controller
    m_s = true_control_gain(cfg.plant, gains.alpha_a, gains.alpha_u)
    ratio = gains.m_s_hat / m_s
    logger.info("真实控制增益 M_s = %.4g，M̂_s/M_s = %.3f", m_s, ratio)
    if not GAIN_RATIO_RANGE[0] <= ratio <= GAIN_RATIO_RANGE[1]:
        logger.warning(
            "M̂_s/M_s = %.3f 超出 [%.1f, %.1f]，控制律可能失去鲁棒裕度",
            ratio, *GAIN_RATIO_RANGE,
        )
    if zero_dynamics_stable(cfg.plant, gains):
        logger.info("滑模面零动态稳定")
    else:
        logger.warning("滑模面零动态不稳定 (alpha_u=%g, lambda_u=%g)", gains.alpha_u, gains.lambda_u)
    return m_s


def initial_state(cfg: EpisodeConfig) -> PlantState:
    """静止起步，θ(0) = θ_d(0)，或按配置从 0 起步"""
    if cfg.start_from_zero:
        return PlantState()
    return PlantState(theta=trajectory(0.0, cfg.amplitude, cfg.omega).theta_d)


def run_episode(cfg: EpisodeConfig) -> EpisodeLog:
    """
    执行 duration/dt 步闭环仿真并记录每一步

    第 k 步控制器使用编码器样本 θ_k 和由 k−1 及之前样本更新的微分器状态，
    u_k 在 [t_k, t_{k+1}] 内零阶保持。分析模式下误差、s、ṡ_r 取真值。
    给定配置与种子，结果逐位确定。

    Raises:
        EpisodeAbortedError: 积分发散或任何信号出现 NaN/Inf，携带已完成部分的记录
    """
    gains = cfg.controller
    dt = cfg.dt
    n_steps = cfg.n_steps
    m_s = _check_design(cfg)
    logger.info("回合开始: kind=%s, %d 步, dt=%g, seed=%d", cfg.kind.value, n_steps, dt, cfg.seed)

    rng = make_rng(cfg.sensors, cfg.seed)
    compensator = create_compensator(cfg.kind, gains, cfg.network)
    analysis = cfg.kind is ControllerKind.EXACT

    state = initial_state(cfg)
    hub = None
    tip = TipEstimatorState(leak_rate=cfg.observer.leak_rate)
    buffers = EpisodeLog.allocate(n_steps)
    config_dict = cfg.to_dict()

    k = 0
    try:
        for k in range(n_steps):
            t = k * dt
            ref = trajectory(t, cfg.amplitude, cfg.omega)
            theta_ddot, phi_ddot = accelerations(state, cfg.plant, cfg.disturbance)
            reading = measure(state, theta_ddot, phi_ddot, cfg.sensors, rng)

            if hub is None:
                hub = init_differentiator(reading.theta_meas, cfg.observer.lipschitz_l, cfg.observer.lambdas)
            tip = tip_estimate_step(tip, reading.tip_acc_meas, hub.z2, dt)

            truth = None
            if analysis:
                errors = errors_from_truth(state, theta_ddot, phi_ddot, ref)
                drift, _ = sliding_terms(state, cfg.plant, gains.alpha_a, gains.alpha_u, cfg.disturbance)
                truth = TruthSignals(drift=drift, m_s=m_s)
            else:
                errors = errors_from_estimates(reading.theta_meas, hub, tip, ref)

            s = sliding_variable(errors, gains)
            srd = s_r_dot(errors, ref, gains)
            d_hat = compensator.estimate(s, srd, truth)
            u = control_law(s, srd, d_hat, gains)

            row = (
                t, ref.theta_d, state.theta, state.phi, hub.z1, hub.z2, tip.phi_hat,
                s, d_hat, u, state.tau, reading.tip_acc_meas, state.theta - ref.theta_d,
            )
            if not all(math.isfinite(v) for v in row):
                raise FloatingPointError(f"t={t:.3f} 出现非有限信号")
            for name, value in zip(COLUMNS, row):
                buffers[name][k] = value

            compensator.learn(s, dt)
            state = step(state, u, cfg.plant, dt, cfg.disturbance)
            hub = differentiator_step(hub, reading.theta_meas, dt)
    except (IntegrationBlowupError, ContractViolation, FloatingPointError) as e:
        partial = EpisodeLog.from_buffers(buffers, k, dt, config=config_dict)
        logger.error("回合在第 %d 步中止: %s", k, e)
        raise EpisodeAbortedError(f"回合在第 {k} 步中止: {e}", log=partial, step=k, cause=e) from e

    log = EpisodeLog.from_buffers(buffers, n_steps, dt, config=config_dict)
    weight_norm = compensator.weight_norm
    if weight_norm > WEIGHT_NORM_LIMIT:
        logger.warning("补偿器权值范数 %.4g 超过 %.0e", weight_norm, WEIGHT_NORM_LIMIT)

    log.summary = summarize(log, gains.phi_bl, cfg.eta, weight_norm, m_s)
    logger.info(
        "回合结束: ITAE=%.4f, RMSE=%.4g, max|s|(后半)=%.4g",
        log.summary.itae, log.summary.rmse_theta, log.summary.max_abs_s_tail,
    )
    return log
