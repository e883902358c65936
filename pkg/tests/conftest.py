import os
import sys

_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, _ROOT)

import pytest

from flexarm.config import (
    ControllerGains,
    ControllerKind,
    EpisodeConfig,
    NetworkSettings,
    PlantParams,
    SensorModel,
)

CONFIG_DIR = os.path.join(_ROOT, "data", "configs")


@pytest.fixture
def plant_params() -> PlantParams:
    return PlantParams()


@pytest.fixture
def gains() -> ControllerGains:
    return ControllerGains()


@pytest.fixture
def quiet_sensors() -> SensorModel:
    return SensorModel(accel_noise_std=0.0)


@pytest.fixture
def short_config() -> EpisodeConfig:
    """带噪声的短回合"""
    return EpisodeConfig(duration=0.5)


@pytest.fixture
def analysis_config() -> EpisodeConfig:
    """真值补偿、无噪声"""
    return EpisodeConfig(
        duration=20.0,
        kind=ControllerKind.EXACT,
        sensors=SensorModel(accel_noise_std=0.0),
    )


@pytest.fixture
def small_network() -> NetworkSettings:
    return NetworkSettings(n=3, c_max=1.0)


@pytest.fixture
def default_config_path() -> str:
    return os.path.join(CONFIG_DIR, "default.json")


@pytest.fixture
def analysis_config_path() -> str:
    return os.path.join(CONFIG_DIR, "analysis.json")
