"""
末端状态估计
由末端绝对加速度减去轮毂角加速度估计得到 φ̈，再泄漏积分得到 φ̇、φ
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class TipEstimatorState:
    phi_hat: float = 0.0
    phi_dot_hat: float = 0.0
    phi_ddot_hat: float = 0.0
    leak_rate: float = 1.0  # 1/s

    def __post_init__(self):
        if self.leak_rate < 0:
            raise ValueError(f"leak_rate 不能为负，得到 {self.leak_rate}")


def tip_estimate_step(
    state: TipEstimatorState,
    tip_acc_meas: float,
    theta_ddot_hat: float,
    dt: float,
) -> TipEstimatorState:
    """
    x ← x·(1 − leak_rate·dt) + input·dt

    φ̂̇ 以本步的 φ̂̈ 为输入，φ̂ 以上一步的 φ̂̇ 为输入。
    """
    if dt <= 0:
        raise ValueError(f"步长必须为正，得到 {dt}")

    decay = 1.0 - state.leak_rate * dt
    phi_ddot = tip_acc_meas - theta_ddot_hat
    return TipEstimatorState(
        phi_hat=state.phi_hat * decay + state.phi_dot_hat * dt,
        phi_dot_hat=state.phi_dot_hat * decay + phi_ddot * dt,
        phi_ddot_hat=phi_ddot,
        leak_rate=state.leak_rate,
    )
