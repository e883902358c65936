from .trajectory import trajectory
from .records import COLUMNS, EpisodeLog, EpisodeSummary
from .metrics import itae, rmse, max_abs_s_tail, tip_rms_tail, control_variation, summarize
from .episode import initial_state, run_episode
from .storage import write_table_csv, write_timeseries_csv, write_json, write_summary_json, save_episode
from .sweep import SWEEP_COLUMNS, SweepRow, build_sweep_configs, run_sweep_async, run_sweep

__all__ = [
    "trajectory",
    "COLUMNS",
    "EpisodeLog",
    "EpisodeSummary",
    "itae",
    "rmse",
    "max_abs_s_tail",
    "tip_rms_tail",
    "control_variation",
    "summarize",
    "initial_state",
    "run_episode",
    "write_table_csv",
    "write_timeseries_csv",
    "write_json",
    "write_summary_json",
    "save_episode",
    "SWEEP_COLUMNS",
    "SweepRow",
    "build_sweep_configs",
    "run_sweep_async",
    "run_sweep",
]
