"""
回合记录
等间隔采样的时间序列与汇总指标
"""

from dataclasses import asdict, dataclass, field
from typing import Dict, Optional

import numpy as np

from ..core.errors import ContractViolation

# CSV 列顺序固定
COLUMNS = (
    "t",
    "theta_d",
    "theta",
    "phi",
    "theta_dot_hat",
    "theta_ddot_hat",
    "phi_hat",
    "s",
    "d_hat",
    "u",
    "tau",
    "tip_acc_meas",
    "e_theta",
)


@dataclass(frozen=True)
class EpisodeSummary:
    itae: float
    rmse_theta: float
    max_abs_s_tail: float
    reaching_fraction: float
    reaching_samples: int
    final_weight_norm: float
    tip_rms_tail: float
    control_variation: float
    true_m_s: float

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass(eq=False)
class EpisodeLog:
    """
    各列等长，t 以 dt 严格递增

    中途失败时只保留已完成的步。
    """
    columns: Dict[str, np.ndarray]
    dt: float
    summary: Optional[EpisodeSummary] = None
    config: Dict = field(default_factory=dict)

    def __post_init__(self):
        missing = [name for name in COLUMNS if name not in self.columns]
        if missing:
            raise ContractViolation(f"缺少列: {missing}")
        self.columns = {name: np.asarray(self.columns[name], dtype=float) for name in COLUMNS}
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) > 1:
            raise ContractViolation(f"各列长度不一致: {lengths}")
        if len(self) > 1 and np.any(np.diff(self.columns["t"]) <= 0):
            raise ContractViolation("t 必须严格递增")

    def __len__(self) -> int:
        return len(self.columns["t"])

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]

    def rows(self):
        """逐行迭代，列顺序同 COLUMNS"""
        return zip(*(self.columns[name] for name in COLUMNS))

    @classmethod
    def allocate(cls, n_steps: int) -> Dict[str, np.ndarray]:
        """预分配列缓冲区，运行结束后截断构造记录"""
        return {name: np.empty(n_steps) for name in COLUMNS}

    @classmethod
    def from_buffers(cls, buffers: Dict[str, np.ndarray], count: int, dt: float, **kwargs) -> "EpisodeLog":
        return cls(columns={name: buffers[name][:count].copy() for name in COLUMNS}, dt=dt, **kwargs)
