from .settings import (
    Settings,
    settings,
    AppSettings,
    ControllerKind,
    PlantParams,
    SensorModel,
    ObserverSettings,
    ControllerGains,
    NetworkSettings,
    EpisodeConfig,
)
from .loader import (
    read_config_file,
    default_config_dict,
    merge_config,
    apply_overrides,
    resolve_param_path,
    get_param,
    set_param,
    load_config,
)

__all__ = [
    "Settings",
    "settings",
    "AppSettings",
    "ControllerKind",
    "PlantParams",
    "SensorModel",
    "ObserverSettings",
    "ControllerGains",
    "NetworkSettings",
    "EpisodeConfig",
    "read_config_file",
    "default_config_dict",
    "merge_config",
    "apply_overrides",
    "resolve_param_path",
    "get_param",
    "set_param",
    "load_config",
]
