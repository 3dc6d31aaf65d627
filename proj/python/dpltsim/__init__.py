"""Deterministic two-reference target localization and tracking simulator."""

from ._core import (
    ConfigError,
    ScenarioConfig,
    SimError,
    ber,
    compare_estimators,
    inradius,
    load_config,
    run_scenario,
    serialize_config,
    speed_sweep,
    tradeoff_map,
)

__all__ = [
    "ConfigError",
    "ScenarioConfig",
    "SimError",
    "ber",
    "compare_estimators",
    "inradius",
    "load_config",
    "run_scenario",
    "serialize_config",
    "speed_sweep",
    "tradeoff_map",
]

__version__ = "1.0.0"
