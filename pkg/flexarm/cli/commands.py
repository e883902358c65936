"""
命令行子命令
run / compare / sweep / validate-config，产出 CSV 与 JSON 文件
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from ..config import (
    ControllerKind,
    EpisodeConfig,
    apply_overrides,
    load_config,
    read_config_file,
    settings,
)
from ..control import list_kinds
from ..core.errors import ConfigurationError, EpisodeAbortedError, FlexArmError, UsageError
from ..simulation import (
    SWEEP_COLUMNS,
    run_episode,
    run_sweep_async,
    save_episode,
    write_json,
    write_table_csv,
    write_timeseries_csv,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None):
    """日志输出到标准错误，级别优先取命令行，其次环境变量"""
    level = (level or settings.app_settings.log_level).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise UsageError(f"未知日志级别: {level}")
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)


def _add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--config", default=None, help="JSON 配置文件（缺省使用内置默认值）")
    parser.add_argument("--out", default=None, help="输出目录")
    parser.add_argument("--seed", type=int, default=None, help="覆盖 episode.seed")
    parser.add_argument("--duration", type=float, default=None, help="覆盖 episode.duration（秒）")
    parser.add_argument("--log-level", default=None, help="日志级别，如 DEBUG/INFO/WARNING")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flexarm",
        description="柔性机械臂智能滑模控制仿真",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in list_kinds()]

    run_parser = sub.add_parser("run", help="运行单个回合")
    _add_common_arguments(run_parser)
    run_parser.add_argument("--controller", choices=kinds, default=None, help="覆盖 controller.kind")

    compare_parser = sub.add_parser("compare", help="同一种子下对比神经网络与自适应补偿")
    _add_common_arguments(compare_parser)

    sweep_parser = sub.add_parser("sweep", help="扫描单个参数")
    _add_common_arguments(sweep_parser)
    sweep_parser.add_argument("--controller", choices=kinds, default=None, help="覆盖 controller.kind")
    sweep_parser.add_argument("--param", required=True, help="参数路径，如 controller.kappa")
    sweep_parser.add_argument("--values", required=True, help="逗号分隔的取值列表")
    sweep_parser.add_argument("--jobs", type=int, default=None, help="并发回合数")

    validate_parser = sub.add_parser("validate-config", help="打印解析后的完整配置")
    _add_common_arguments(validate_parser)
    validate_parser.add_argument("--controller", choices=kinds, default=None, help="覆盖 controller.kind")

    return parser


def _config_path(args) -> Optional[str]:
    return args.config or settings.app_settings.config_path


def _out_dir(args) -> Path:
    return Path(args.out or settings.app_settings.output_dir)


def _resolved_config_dict(args, kind: Optional[str] = None) -> dict:
    """默认值 → 配置文件 → 命令行，经 EpisodeConfig 校验后导出"""
    path = _config_path(args)
    data = read_config_file(path) if path else {}
    data = apply_overrides(data, seed=args.seed, kind=kind, duration=args.duration)
    return EpisodeConfig.from_dict(data).to_dict()


def parse_values(text: str) -> List[float]:
    values = []
    for token in (text or "").split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(int(token))
        except ValueError:
            try:
                values.append(float(token))
            except ValueError:
                raise UsageError(f"无法解析的取值: {token!r}") from None
    if not values:
        raise UsageError("--values 不能为空")
    return values


def _print_summary(title: str, summary):
    print(f"\n📊 {title}")
    for key, value in summary.to_dict().items():
        print(f"  {key:<20} {value:.6g}" if isinstance(value, float) else f"  {key:<20} {value}")


def cmd_run(args) -> int:
    cfg = load_config(_config_path(args), seed=args.seed, kind=args.controller, duration=args.duration)
    out_dir = _out_dir(args)
    try:
        log = run_episode(cfg)
    except EpisodeAbortedError as e:
        if e.log is not None:
            write_timeseries_csv(e.log, out_dir / "timeseries.csv")
        raise

    save_episode(log, out_dir)
    logger.info("回合结果已写入 %s", out_dir)
    _print_summary(f"{cfg.kind.value} 回合", log.summary)
    print(f"\n✅ 结果已写入 {out_dir}")
    return EXIT_OK


def cmd_compare(args) -> int:
    out_dir = _out_dir(args)
    itaes = {}
    for kind in (ControllerKind.INTELLIGENT, ControllerKind.ADAPTIVE):
        cfg = EpisodeConfig.from_dict(_resolved_config_dict(args, kind=kind.value))
        kind_dir = out_dir / kind.value
        try:
            log = run_episode(cfg)
        except EpisodeAbortedError as e:
            if e.log is not None:
                write_timeseries_csv(e.log, kind_dir / "timeseries.csv")
            raise
        save_episode(log, kind_dir)
        itaes[kind] = log.summary.itae

    itae_int = itaes[ControllerKind.INTELLIGENT]
    itae_ada = itaes[ControllerKind.ADAPTIVE]
    # 基线 ITAE 为 0 时比值无定义，JSON 中写 null
    ratio = itae_int / itae_ada if itae_ada > 0 else None
    write_json(
        {"itae_intelligent": itae_int, "itae_adaptive": itae_ada, "ratio": ratio},
        out_dir / "comparison.json",
    )

    print(f"\n{'controller':<14}{'ITAE':>12}")
    print(f"{'intelligent':<14}{itae_int:>12.4f}")
    print(f"{'adaptive':<14}{itae_ada:>12.4f}")
    print(f"\nratio = {ratio:.3f}" if ratio is not None else "\nratio = n/a")
    return EXIT_OK


async def cmd_sweep(args) -> int:
    values = parse_values(args.values)
    base = _resolved_config_dict(args, kind=args.controller)
    jobs = args.jobs if args.jobs is not None else settings.app_settings.jobs
    if jobs < 1:
        raise UsageError(f"--jobs 至少为 1，得到 {jobs}")

    rows = await run_sweep_async(base, args.param, values, jobs=jobs)
    out_dir = _out_dir(args)
    write_table_csv(out_dir / "sweep.csv", SWEEP_COLUMNS, (row.as_tuple() for row in rows))

    print(f"\n{'value':>12}{'itae':>12}{'rmse':>12}{'max|s|':>12}")
    for row in rows:
        print("".join(f"{v:>12.6g}" for v in row.as_tuple()))
    print(f"\n✅ 结果已写入 {out_dir / 'sweep.csv'}")
    return EXIT_OK


def cmd_validate_config(args) -> int:
    data = _resolved_config_dict(args, kind=args.controller)
    print(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True))
    return EXIT_OK


async def execute(argv: Optional[Sequence[str]] = None) -> int:
    """
    解析参数并执行子命令

    Returns:
        0 成功；1 运行期错误；2 用法或配置错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        configure_logging(args.log_level)
        if args.command == "run":
            return cmd_run(args)
        if args.command == "compare":
            return cmd_compare(args)
        if args.command == "sweep":
            return await cmd_sweep(args)
        return cmd_validate_config(args)
    except (UsageError, ConfigurationError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except EpisodeAbortedError as e:
        print(f"❌ 回合中止: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    except FlexArmError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as e:
        print(f"❌ 无法写入结果: {e}", file=sys.stderr)
        return EXIT_RUNTIME
