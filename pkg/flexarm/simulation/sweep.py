"""
参数扫描
每个取值一个独立回合，进程池并发执行，结果按输入顺序返回
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence

from ..config import EpisodeConfig, get_param, resolve_param_path, set_param
from .episode import run_episode

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ("value", "itae", "rmse", "max_abs_s_tail")


@dataclass(frozen=True)
class SweepRow:
    value: float
    itae: float
    rmse: float
    max_abs_s_tail: float

    def as_tuple(self):
        return (self.value, self.itae, self.rmse, self.max_abs_s_tail)


def _sweep_point(value: float, config_dict: Dict[str, Any]) -> SweepRow:
    """进程池工作函数，只接收可序列化的字典"""
    summary = run_episode(EpisodeConfig.from_dict(config_dict)).summary
    return SweepRow(value=value, itae=summary.itae, rmse=summary.rmse_theta, max_abs_s_tail=summary.max_abs_s_tail)


def build_sweep_configs(config_dict: Dict[str, Any], param_path: str, values: Sequence[float]) -> List[Dict[str, Any]]:
    """
    为每个取值生成完整配置

    Raises:
        UsageError: 参数路径无法解析
        ConfigurationError: 某个取值使配置非法
    """
    resolve_param_path(param_path)
    configs = []
    for value in values:
        data = set_param(config_dict, param_path, value)
        EpisodeConfig.from_dict(data)  # 提前暴露非法取值
        configs.append(data)
    return configs


async def run_sweep_async(
    config_dict: Dict[str, Any],
    param_path: str,
    values: Sequence[float],
    jobs: int = 1,
) -> List[SweepRow]:
    configs = build_sweep_configs(config_dict, param_path, values)
    logger.info(
        "扫描 %s: 基准值 %r, %d 个取值, jobs=%d",
        param_path, get_param(config_dict, param_path), len(values), jobs,
    )

    if jobs <= 1:
        return [_sweep_point(v, c) for v, c in zip(values, configs)]

    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        tasks = [loop.run_in_executor(pool, _sweep_point, v, c) for v, c in zip(values, configs)]
        # gather 保持提交顺序
        return list(await asyncio.gather(*tasks))


def run_sweep(
    config_dict: Dict[str, Any],
    param_path: str,
    values: Sequence[float],
    jobs: int = 1,
) -> List[SweepRow]:
    return asyncio.run(run_sweep_async(config_dict, param_path, values, jobs))
