"""
二阶鲁棒精确微分器（滑模观测器）
由量化的轮毂角估计角速度与角加速度
"""

import math
from dataclasses import dataclass, replace
from typing import Tuple


def _signed_power(x: float, p: float) -> float:
    """|x|^p·sign(x)"""
    if x == 0.0:
        return 0.0
    return math.copysign(abs(x) ** p, x)


@dataclass(frozen=True)
class DifferentiatorState:
    """
    微分器状态

    lambdas 从最高阶导数往下编号：lambdas[0]·L 作用于 z2，
    lambdas[1]·L^½ 作用于 z1，lambdas[2]·L^⅓ 作用于 z0。
    """
    z0: float = 0.0
    z1: float = 0.0
    z2: float = 0.0
    lipschitz_l: float = 400.0
    lambdas: Tuple[float, float, float] = (1.1, 1.5, 2.0)

    def __post_init__(self):
        if self.lipschitz_l <= 0:
            raise ValueError(f"lipschitz_l 必须为正，得到 {self.lipschitz_l}")
        if len(self.lambdas) != 3 or any(v <= 0 for v in self.lambdas):
            raise ValueError(f"lambdas 需要 3 个正增益，得到 {self.lambdas}")


def init_differentiator(
    y0: float,
    lipschitz_l: float = 400.0,
    lambdas: Tuple[float, float, float] = (1.1, 1.5, 2.0),
) -> DifferentiatorState:
    """以首个测量值初始化：z0 = y(0)，z1 = z2 = 0"""
    return DifferentiatorState(z0=y0, z1=0.0, z2=0.0, lipschitz_l=lipschitz_l, lambdas=tuple(lambdas))


def differentiator_step(state: DifferentiatorState, y_meas: float, dt: float) -> DifferentiatorState:
    """
    递归形式的显式 Euler 一步

        v0 = −λ2·L^⅓·|z0 − y|^⅔·sign(z0 − y) + z1
        v1 = −λ1·L^½·|z1 − v0|^½·sign(z1 − v0) + z2
        ż2 = −λ0·L·sign(z2 − v1)

    z2 的注入项幅值恒为 λ0·L，单步变化有界。
    """
    if dt <= 0:
        raise ValueError(f"步长必须为正，得到 {dt}")

    big_l = state.lipschitz_l
    lam0, lam1, lam2 = state.lambdas

    v0 = -lam2 * big_l ** (1.0 / 3.0) * _signed_power(state.z0 - y_meas, 2.0 / 3.0) + state.z1
    v1 = -lam1 * math.sqrt(big_l) * _signed_power(state.z1 - v0, 0.5) + state.z2
    e2 = state.z2 - v1
    z2_rate = -lam0 * big_l * (math.copysign(1.0, e2) if e2 != 0.0 else 0.0)

    return replace(
        state,
        z0=state.z0 + dt * v0,
        z1=state.z1 + dt * v1,
        z2=state.z2 + dt * z2_rate,
    )
