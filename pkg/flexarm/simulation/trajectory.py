"""期望轨迹 θ_d = A·cos(ωt) 及其解析导数"""

import math

from ..control import ReferenceState


def trajectory(t: float, amplitude: float, omega: float) -> ReferenceState:
    c = math.cos(omega * t)
    s = math.sin(omega * t)
    return ReferenceState(
        theta_d=amplitude * c,
        theta_d_dot=-amplitude * omega * s,
        theta_d_ddot=-amplitude * omega ** 2 * c,
        theta_d_dddot=amplitude * omega ** 3 * s,
    )
