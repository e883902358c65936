"""
flexarm - 单连杆柔性机械臂的神经网络滑模控制仿真

模块：
    config      仿真参数与全局设置
    plant       真值模型与传感器
    estimation  鲁棒微分器与末端状态估计
    control     滑模面、控制律与补偿器
    neural      高斯径向基网络
    simulation  闭环回合、指标与结果文件
    cli         命令行
"""

from .config import settings, ControllerKind, EpisodeConfig, load_config
from .simulation import run_episode, run_sweep, itae

__version__ = "1.0.0"
__all__ = [
    "settings",
    "ControllerKind",
    "EpisodeConfig",
    "load_config",
    "run_episode",
    "run_sweep",
    "itae",
]
