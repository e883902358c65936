"""
配置管理模块
统一管理仿真参数（被控对象、传感器、观测器、控制器、神经网络、仿真回合）
以及进程级的全局设置
"""

import math
import os
from dataclasses import dataclass, field, fields
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from ..core.errors import ConfigurationError

# 尝试加载 .env 文件
try:
    from dotenv import load_dotenv
    # 从项目根目录加载 .env
    env_path = Path(__file__).parent.parent.parent / ".env"
    load_dotenv(env_path)
except ImportError:
    pass  # 如果没有安装 python-dotenv，跳过


class ControllerKind(Enum):
    """补偿器类型"""
    INTELLIGENT = "intelligent"  # 神经网络补偿
    ADAPTIVE = "adaptive"        # 标量自适应基线
    EXACT = "exact"              # 分析模式：真值补偿


def _require(condition: bool, message: str):
    if not condition:
        raise ConfigurationError(message)


def _as_int(name: str, value: Any) -> int:
    if isinstance(value, bool):
        raise ConfigurationError(f"{name} 必须是整数，得到 {value!r}")
    if isinstance(value, float):
        if not value.is_integer():
            raise ConfigurationError(f"{name} 必须是整数，得到 {value!r}")
        return int(value)
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{name} 必须是整数，得到 {value!r}") from None


def _as_float(name: str, value: Any) -> float:
    if isinstance(value, bool):
        raise ConfigurationError(f"{name} 必须是数值，得到 {value!r}")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{name} 必须是数值，得到 {value!r}") from None


def _as_bool(name: str, value: Any) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.lower() in ("true", "false"):
        return value.lower() == "true"
    raise ConfigurationError(f"{name} 必须是布尔值，得到 {value!r}")


def _as_floats(name: str, value: Any) -> Tuple[float, ...]:
    if isinstance(value, (str, bytes)) or not hasattr(value, "__iter__"):
        raise ConfigurationError(f"{name} 必须是数值列表，得到 {value!r}")
    return tuple(_as_float(name, v) for v in value)


def _section_kwargs(cls, data: Optional[Dict], section: str) -> Dict[str, Any]:
    """校验字段名并按字段类型转换取值"""
    data = dict(data or {})
    known = {f.name: f for f in fields(cls)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise ConfigurationError(f"[{section}] 未知字段: {', '.join(unknown)}")

    kwargs = {}
    for name, value in data.items():
        key = f"{section}.{name}"
        ftype = known[name].type
        if value is None:
            if known[name].default is not None:
                raise ConfigurationError(f"{key} 不能为空")
            kwargs[name] = None
        elif ftype is int:
            kwargs[name] = _as_int(key, value)
        elif ftype is float:
            kwargs[name] = _as_float(key, value)
        elif ftype is bool:
            kwargs[name] = _as_bool(key, value)
        else:
            kwargs[name] = value
    return kwargs


@dataclass(frozen=True)
class PlantParams:
    """单连杆柔性机械臂集中参数（真值对象）"""
    m_aa: float = 2.0     # 轮毂+连杆惯量 kg·m²
    m_au: float = 0.4     # 耦合惯量 kg·m²
    m_uu: float = 0.6     # 末端单元惯量 kg·m²
    k_phi: float = 120.0  # 末端弹性刚度 N·m/rad
    c_phi: float = 0.5    # 末端结构阻尼 N·m·s/rad
    gamma: float = 25.0   # 执行器滤波速率 1/s

    def __post_init__(self):
        _require(self.m_aa > 0, f"m_aa 必须为正，得到 {self.m_aa}")
        _require(self.m_uu > 0, f"m_uu 必须为正，得到 {self.m_uu}")
        _require(
            self.m_aa * self.m_uu - self.m_au ** 2 > 0,
            "惯性矩阵非正定: m_aa·m_uu − m_au² ≤ 0",
        )
        _require(self.k_phi >= 0, f"k_phi 不能为负，得到 {self.k_phi}")
        _require(self.c_phi >= 0, f"c_phi 不能为负，得到 {self.c_phi}")
        _require(self.gamma > 0, f"gamma 必须为正，得到 {self.gamma}")

    @property
    def determinant(self) -> float:
        return self.m_aa * self.m_uu - self.m_au ** 2

    def to_dict(self) -> Dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: Optional[Dict]) -> "PlantParams":
        return cls(**_section_kwargs(cls, data, "plant"))


@dataclass(frozen=True)
class SensorModel:
    """编码器量化与 MEMS 加速度计噪声模型"""
    encoder_step: float = 2 * math.pi / 8192  # rad
    accel_noise_std: float = 2.0              # rad/s²
    seed: int = 0

    def __post_init__(self):
        _require(self.encoder_step >= 0, "encoder_step 不能为负")
        _require(self.accel_noise_std >= 0, "accel_noise_std 不能为负")
        _require(self.seed >= 0, "seed 不能为负")

    def to_dict(self) -> Dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: Optional[Dict]) -> "SensorModel":
        return cls(**_section_kwargs(cls, data, "sensors"))


@dataclass(frozen=True)
class ObserverSettings:
    """滑模微分器与末端估计器参数"""
    lipschitz_l: float = 400.0  # rad/s³
    # 从最高阶导数往下：z2 用 λ0·L，z1 用 λ1·L^½，z0 用 λ2·L^⅓
    lambdas: Tuple[float, float, float] = (1.1, 1.5, 2.0)
    leak_rate: float = 1.0  # 1/s

    def __post_init__(self):
        lambdas = _as_floats("observer.lambdas", self.lambdas)
        object.__setattr__(self, "lambdas", lambdas)
        _require(len(lambdas) == 3, "observer.lambdas 需要 3 个增益")
        _require(all(v > 0 for v in lambdas), "observer.lambdas 必须全部为正")
        _require(self.lipschitz_l > 0, "observer.lipschitz_l 必须为正")
        _require(self.leak_rate >= 0, "observer.leak_rate 不能为负")

    def to_dict(self) -> Dict:
        return {
            "lipschitz_l": self.lipschitz_l,
            "lambdas": list(self.lambdas),
            "leak_rate": self.leak_rate,
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict]) -> "ObserverSettings":
        return cls(**_section_kwargs(cls, data, "observer"))


@dataclass(frozen=True)
class ControllerGains:
    """滑模面与控制律参数"""
    alpha_a: float = 1.0
    alpha_u: float = 0.4
    lambda_a: float = 6.0   # 1/s
    lambda_u: float = 1.0   # 1/s，取 6 时零动态不稳定
    kappa: float = 40.0
    phi_bl: float = 2.0     # 边界层宽度
    m_s_hat: float = 12.5   # 控制增益粗估计
    f_s_hat: float = 0.0    # 不掌握刚度与阻尼信息

    def __post_init__(self):
        _require(self.alpha_a > 0, "alpha_a 必须为正")
        _require(self.lambda_a > 0, "lambda_a 必须为正")
        _require(self.lambda_u > 0, "lambda_u 必须为正")
        _require(self.kappa > 0, "kappa 必须为正")
        _require(self.phi_bl > 0, "phi_bl 必须为正")
        _require(self.m_s_hat != 0, "m_s_hat 不能为 0")

    def to_dict(self) -> Dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: Optional[Dict]) -> "ControllerGains":
        return cls(**_section_kwargs(cls, data, "controller"))


@dataclass(frozen=True)
class NetworkSettings:
    """单输入高斯网络配置"""
    n: int = 7
    c_max: float = 6.0
    centers: Optional[Tuple[float, ...]] = None  # 显式给出时覆盖 c_max
    width: Optional[float] = None                # 缺省为中心跨度的 2 倍
    nu: float = 150.0                            # 学习率，自适应基线共用
    initial_weights: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        _require(self.n >= 1, "network.n 至少为 1")
        _require(self.c_max > 0, "network.c_max 必须为正")
        _require(self.nu > 0, "network.nu 必须为正")
        if self.width is not None:
            object.__setattr__(self, "width", _as_float("network.width", self.width))
            _require(self.width > 0, "network.width 必须为正")
        if self.centers is not None:
            centers = _as_floats("network.centers", self.centers)
            object.__setattr__(self, "centers", centers)
            _require(len(centers) == self.n, "network.centers 长度必须等于 n")
            _require(
                all(b > a for a, b in zip(centers, centers[1:])),
                "network.centers 必须严格递增",
            )
        if self.initial_weights is not None:
            weights = _as_floats("network.initial_weights", self.initial_weights)
            object.__setattr__(self, "initial_weights", weights)
            _require(len(weights) == self.n, "network.initial_weights 长度必须等于 n")
            _require(all(math.isfinite(w) for w in weights), "network.initial_weights 必须有限")

    def resolved_centers(self) -> Tuple[float, ...]:
        if self.centers is not None:
            return self.centers
        if self.n == 1:
            return (0.0,)
        spacing = 2 * self.c_max / (self.n - 1)
        return tuple(-self.c_max + i * spacing for i in range(self.n))

    def resolved_width(self) -> float:
        """
        共享高斯宽度

        缺省取中心跨度的 2 倍，|s| 的整个摆幅都落在每个高斯的主响应区内。
        """
        if self.width is not None:
            return self.width
        centers = self.resolved_centers()
        span = centers[-1] - centers[0]
        return 2.0 * span if span > 0 else self.c_max

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "c_max": self.c_max,
            "centers": list(self.centers) if self.centers is not None else None,
            "width": self.width,
            "nu": self.nu,
            "initial_weights": (
                list(self.initial_weights) if self.initial_weights is not None else None
            ),
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict]) -> "NetworkSettings":
        return cls(**_section_kwargs(cls, data, "network"))


@dataclass(frozen=True)
class EpisodeConfig:
    """一次闭环仿真的完整配置"""
    duration: float = 20.0
    dt: float = 1e-3
    seed: int = 0
    amplitude: float = math.pi / 4
    omega: float = math.pi
    start_from_zero: bool = False  # True 时 θ(0)=0，考察最坏的趋近过程
    disturbance: Tuple[float, float] = (0.0, 0.0)
    kind: ControllerKind = ControllerKind.INTELLIGENT
    eta: float = 0.1  # 趋近条件诊断阈值
    plant: PlantParams = field(default_factory=PlantParams)
    sensors: SensorModel = field(default_factory=SensorModel)
    observer: ObserverSettings = field(default_factory=ObserverSettings)
    controller: ControllerGains = field(default_factory=ControllerGains)
    network: NetworkSettings = field(default_factory=NetworkSettings)

    def __post_init__(self):
        _require(self.duration > 0, "episode.duration 必须为正")
        _require(self.dt > 0, "episode.dt 必须为正")
        _require(self.seed >= 0, "episode.seed 不能为负")
        ratio = self.duration / self.dt
        _require(
            abs(ratio - round(ratio)) <= 1e-6 * max(1.0, ratio),
            f"duration/dt 必须为整数，得到 {ratio}",
        )
        disturbance = _as_floats("episode.disturbance", self.disturbance)
        _require(len(disturbance) == 2, "episode.disturbance 需要 [d_a, d_u]")
        object.__setattr__(self, "disturbance", disturbance)
        if not isinstance(self.kind, ControllerKind):
            try:
                object.__setattr__(self, "kind", ControllerKind(self.kind))
            except ValueError:
                raise ConfigurationError(f"未知控制器类型: {self.kind!r}") from None
        _require(self.eta > 0, "controller.eta 必须为正")

    @property
    def n_steps(self) -> int:
        return int(round(self.duration / self.dt))

    def to_dict(self) -> Dict:
        """按 JSON 配置文件的分节结构导出"""
        controller = self.controller.to_dict()
        controller["kind"] = self.kind.value
        controller["eta"] = self.eta
        return {
            "plant": self.plant.to_dict(),
            "sensors": self.sensors.to_dict(),
            "observer": self.observer.to_dict(),
            "controller": controller,
            "network": self.network.to_dict(),
            "episode": {
                "duration": self.duration,
                "dt": self.dt,
                "seed": self.seed,
                "amplitude": self.amplitude,
                "omega": self.omega,
                "start_from_zero": self.start_from_zero,
                "disturbance": list(self.disturbance),
            },
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict]) -> "EpisodeConfig":
        data = dict(data or {})
        sections = {"plant", "sensors", "observer", "controller", "network", "episode"}
        unknown = sorted(set(data) - sections)
        if unknown:
            raise ConfigurationError(f"未知配置节: {', '.join(unknown)}")

        controller = dict(data.get("controller") or {})
        kind = controller.pop("kind", ControllerKind.INTELLIGENT.value)
        eta = controller.pop("eta", 0.1)

        episode_fields = {"duration", "dt", "seed", "amplitude", "omega", "start_from_zero", "disturbance"}
        episode = dict(data.get("episode") or {})
        unknown = sorted(set(episode) - episode_fields)
        if unknown:
            raise ConfigurationError(f"[episode] 未知字段: {', '.join(unknown)}")
        episode_kwargs = _section_kwargs(cls, episode, "episode")

        return cls(
            **episode_kwargs,
            kind=kind,
            eta=_as_float("controller.eta", eta),
            plant=PlantParams.from_dict(data.get("plant")),
            sensors=SensorModel.from_dict(data.get("sensors")),
            observer=ObserverSettings.from_dict(data.get("observer")),
            controller=ControllerGains.from_dict(controller),
            network=NetworkSettings.from_dict(data.get("network")),
        )


@dataclass
class AppSettings:
    """进程级设置（来自环境变量）"""
    log_level: str = "INFO"
    jobs: int = 1
    output_dir: str = "./results"
    config_path: Optional[str] = None


class Settings:
    """全局配置单例"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        self.app_settings = AppSettings()
        self._load_from_env()
        self._initialized = True

    def _load_from_env(self):
        """从环境变量加载配置"""
        if os.getenv("FLEXARM_LOG_LEVEL"):
            self.app_settings.log_level = os.getenv("FLEXARM_LOG_LEVEL", "INFO").upper()

        if os.getenv("FLEXARM_JOBS"):
            try:
                self.app_settings.jobs = max(1, int(os.getenv("FLEXARM_JOBS", "1")))
            except ValueError:
                pass  # 非法取值保持默认

        if os.getenv("FLEXARM_OUTPUT_DIR"):
            self.app_settings.output_dir = os.getenv("FLEXARM_OUTPUT_DIR", "./results")

        if os.getenv("FLEXARM_CONFIG"):
            self.app_settings.config_path = os.getenv("FLEXARM_CONFIG")

    def reload(self):
        """重新读取环境变量"""
        self.app_settings = AppSettings()
        self._load_from_env()


# 全局配置实例
settings = Settings()
