#!/usr/bin/env python3
"""
Run configuration for zbasis.
Contains Strategy, EcartRule, StdConfig and the JSON settings loader.
"""
import json
import logging
import os
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "ZBASIS_CONFIG"


class ConfigError(ValueError):
    """Raised for unreadable or invalid settings."""


class Strategy(str, Enum):
    ALL = "all"
    JUST = "just"


class EcartRule(str, Enum):
    FIRST = "first"
    MINIMAL = "minimal"


@dataclass(frozen=True)
class StdConfig:
    """Settings for one std run; file values are overridden by CLI flags."""

    strategy: Strategy = Strategy.ALL
    precheck: bool = False
    interreduce: bool = True
    tail_reduce_output: bool = False
    pair_cap: Optional[int] = None
    reduction_cap: int = 100_000
    gcd_augment: bool = True
    ecart_rule: EcartRule = EcartRule.FIRST
    product_criterion: bool = False
    constant_lift: bool = True
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.reduction_cap < 1:
            raise ConfigError(f"reduction_cap must be positive, got {self.reduction_cap}")
        if self.pair_cap is not None and self.pair_cap < 1:
            raise ConfigError(f"pair_cap must be positive, got {self.pair_cap}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be positive, got {self.jobs}")

    def merged(self, **overrides: Any) -> "StdConfig":
        """Copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if not changes:
            return self
        return replace(self, **_coerce(changes))


def _coerce(values: Dict[str, Any]) -> Dict[str, Any]:
    out = dict(values)
    try:
        if "strategy" in out:
            out["strategy"] = Strategy(out["strategy"])
        if "ecart_rule" in out:
            out["ecart_rule"] = EcartRule(out["ecart_rule"])
    except ValueError as e:
        raise ConfigError(str(e)) from None
    for name in ("reduction_cap", "pair_cap", "jobs"):
        if out.get(name) is not None and not isinstance(out[name], int):
            raise ConfigError(f"{name} must be an integer, got {out[name]!r}")
    return out


def default_config_path() -> str:
    """Path of the settings file: $ZBASIS_CONFIG or ~/.zbasis/config.json."""
    return os.environ.get(CONFIG_ENV_VAR) or os.path.expanduser("~/.zbasis/config.json")


def load_config(path: Optional[str] = None) -> StdConfig:
    """Load settings from a JSON object; a missing file yields the defaults."""
    config_path = path or default_config_path()
    if not os.path.exists(config_path):
        return StdConfig()
    try:
        with open(config_path, "r") as f:
            data = json.load(f)
    except (json.JSONDecodeError, OSError) as e:
        raise ConfigError(f"cannot read config {config_path}: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"config {config_path} must hold a JSON object")

    known = {f.name for f in fields(StdConfig)}
    for key in sorted(set(data) - known):
        logger.warning("ignoring unknown config key '%s' in %s", key, config_path)
    values = {k: v for k, v in data.items() if k in known}
    return StdConfig().merged(**values)
