"""
JSON 配置读取
默认值 → 配置文件 → 命令行参数，逐层覆盖
"""

import copy
import json
import logging
import os
from typing import Any, Dict, Optional, Tuple

from ..core.errors import ConfigurationError, UsageError
from .settings import ControllerKind, EpisodeConfig

logger = logging.getLogger(__name__)


def read_config_file(path: str) -> Dict:
    """读取 JSON 配置文件（不做合并）"""
    if not path or not os.path.isfile(path):
        raise UsageError(f"配置文件不存在: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"配置文件解析失败 {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigurationError(f"配置文件顶层必须是对象: {path}")
    return data


def default_config_dict() -> Dict:
    return EpisodeConfig().to_dict()


def merge_config(base: Dict, update: Dict) -> Dict:
    """按节合并，update 中的字段覆盖 base"""
    merged = copy.deepcopy(base)
    for section, values in (update or {}).items():
        if isinstance(values, dict) and isinstance(merged.get(section), dict):
            merged[section].update(copy.deepcopy(values))
        else:
            merged[section] = copy.deepcopy(values)
    return merged


def apply_overrides(
    data: Dict,
    seed: Optional[int] = None,
    kind: Optional[str] = None,
    duration: Optional[float] = None,
) -> Dict:
    """应用命令行覆盖项"""
    data = copy.deepcopy(data)
    if seed is not None:
        data.setdefault("episode", {})["seed"] = seed
    if kind is not None:
        try:
            data.setdefault("controller", {})["kind"] = ControllerKind(kind).value
        except ValueError:
            raise ConfigurationError(f"未知控制器类型: {kind!r}") from None
    if duration is not None:
        data.setdefault("episode", {})["duration"] = duration
    return data


def resolve_param_path(path: str) -> Tuple[str, str]:
    """
    把扫描参数路径解析为 (节, 字段)

    支持 "controller.kappa" 形式，也支持在各节中唯一的裸字段名 "kappa"。
    """
    schema = default_config_dict()
    parts = path.split(".") if path else []
    if len(parts) == 2:
        section, key = parts
        if section in schema and key in schema[section]:
            return section, key
        raise UsageError(f"未知参数路径: {path}")
    if len(parts) == 1:
        owners = [s for s, values in schema.items() if parts[0] in values]
        if len(owners) == 1:
            return owners[0], parts[0]
        if len(owners) > 1:
            raise UsageError(f"参数名 {path} 有歧义，可选: {', '.join(f'{o}.{path}' for o in owners)}")
    raise UsageError(f"未知参数路径: {path}")


def get_param(data: Dict, path: str) -> Any:
    section, key = resolve_param_path(path)
    resolved = merge_config(default_config_dict(), data)
    return resolved[section][key]


def set_param(data: Dict, path: str, value: Any) -> Dict:
    section, key = resolve_param_path(path)
    data = copy.deepcopy(data)
    data.setdefault(section, {})[key] = value
    return data


def load_config(
    path: Optional[str] = None,
    seed: Optional[int] = None,
    kind: Optional[str] = None,
    duration: Optional[float] = None,
) -> EpisodeConfig:
    """
    解析出最终生效的配置

    Args:
        path: JSON 配置文件路径，None 表示只用默认值
        seed: 覆盖 episode.seed
        kind: 覆盖 controller.kind
        duration: 覆盖 episode.duration

    Returns:
        EpisodeConfig
    """
    data = read_config_file(path) if path is not None else {}
    data = apply_overrides(data, seed=seed, kind=kind, duration=duration)
    config = EpisodeConfig.from_dict(data)
    logger.debug("已解析配置: %s", path or "<defaults>")
    return config
