from .commands import (
    EXIT_OK,
    EXIT_RUNTIME,
    EXIT_USAGE,
    build_parser,
    configure_logging,
    parse_values,
    cmd_run,
    cmd_compare,
    cmd_sweep,
    cmd_validate_config,
    execute,
)

__all__ = [
    "EXIT_OK",
    "EXIT_RUNTIME",
    "EXIT_USAGE",
    "build_parser",
    "configure_logging",
    "parse_values",
    "cmd_run",
    "cmd_compare",
    "cmd_sweep",
    "cmd_validate_config",
    "execute",
]
