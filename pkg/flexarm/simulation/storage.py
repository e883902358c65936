"""
结果持久化
所有文件先写临时文件再原子替换，要么完整存在要么不存在
"""

import csv
import json
import os
import tempfile
from pathlib import Path
from typing import Dict, Iterable, Sequence, Union

from .records import COLUMNS, EpisodeLog

PathLike = Union[str, Path]


def _format(value: float) -> str:
    return "%.9g" % value


def _atomic_write(path: PathLike, write):
    """在目标目录创建临时文件，写完后 os.replace"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            write(f)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def write_table_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[float]]):
    def _write(f):
        writer = csv.writer(f)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format(v) for v in row])

    _atomic_write(path, _write)


def write_timeseries_csv(log: EpisodeLog, path: PathLike):
    write_table_csv(path, COLUMNS, log.rows())


def write_json(data: Dict, path: PathLike):
    def _write(f):
        json.dump(data, f, ensure_ascii=False, indent=2, sort_keys=True)
        f.write("\n")

    _atomic_write(path, _write)


def write_summary_json(log: EpisodeLog, path: PathLike):
    """汇总指标 + 完整生效配置"""
    data = {
        "summary": log.summary.to_dict() if log.summary is not None else None,
        "samples": len(log),
        "config": log.config,
    }
    write_json(data, path)


def save_episode(log: EpisodeLog, out_dir: PathLike):
    out_dir = Path(out_dir)
    write_timeseries_csv(log, out_dir / "timeseries.csv")
    write_summary_json(log, out_dir / "summary.json")
