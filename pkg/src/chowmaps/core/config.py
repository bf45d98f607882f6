"""
Configuration for chowmaps runs.

Settings come from ``ops/config.yaml`` (or the file named by ``CHOWMAPS_CONFIG``),
then environment overrides, optionally seeded from a ``.env`` file.
"""

from __future__ import annotations

import os
import pathlib
from functools import lru_cache
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from .exceptions import ConfigurationError

try:
    from dotenv import load_dotenv
except ImportError:
    load_dotenv = None

CONFIG_ENV_VAR = "CHOWMAPS_CONFIG"
THREADS_ENV_VAR = "CHOWMAPS_THREADS"
LOG_LEVEL_ENV_VAR = "CHOWMAPS_LOG_LEVEL"
DEFAULT_CONFIG_PATH = "ops/config.yaml"


class ComputeCfg(BaseModel):
    threads: Optional[int] = Field(None, ge=1, description="Worker threads; None = available parallelism")
    restriction_sign: Literal["negative", "positive"] = "negative"
    debug_euler: bool = False


class OutputCfg(BaseModel):
    format: Literal["json", "latex", "text"] = "text"
    json_indent: int = 2


class LoggingCfg(BaseModel):
    level: str = "WARNING"
    enable_file_logging: bool = False
    log_dir: Optional[str] = None
    structured: bool = False


class VerifyCfg(BaseModel):
    cross_r_max: int = 4
    cross_d_max: int = 9
    conjecture_r_max: int = 3
    conjecture_d_max: int = 9
    # opt-in long range mode
    long_r_max: int = 9
    long_d_max: int = 49
    # generation only, with --long --weak
    long_weak_r_max: int = 5
    long_weak_d_max: int = 99


class Settings(BaseModel):
    compute: ComputeCfg = ComputeCfg()
    output: OutputCfg = OutputCfg()
    logging: LoggingCfg = LoggingCfg()
    verify: VerifyCfg = VerifyCfg()

    def effective_threads(self) -> int:
        if self.compute.threads:
            return self.compute.threads
        return os.cpu_count() or 1


def _load_env_files() -> None:
    if load_dotenv is None:
        return
    env_file = pathlib.Path.cwd() / ".env"
    if env_file.exists():
        load_dotenv(env_file)


def _resolve_config_path() -> pathlib.Path:
    config_path = pathlib.Path(os.environ.get(CONFIG_ENV_VAR, DEFAULT_CONFIG_PATH))
    if not config_path.is_absolute():
        # relative paths are anchored at the repository root
        project_root = pathlib.Path(__file__).resolve().parents[3]
        config_path = project_root / config_path
    return config_path


def load_settings(path: Optional[str] = None) -> Settings:
    """Load settings from YAML, falling back to defaults when no file exists."""
    _load_env_files()
    config_path = pathlib.Path(path) if path else _resolve_config_path()

    data: dict = {}
    if config_path.exists():
        try:
            data = yaml.safe_load(config_path.read_text()) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Malformed config file {config_path}", {"error": str(e)})
        if not isinstance(data, dict):
            raise ConfigurationError(f"Config file {config_path} must contain a mapping")
    elif path:
        raise ConfigurationError(f"Config file not found: {config_path}")

    try:
        settings = Settings(**data)
    except PydanticValidationError as e:
        raise ConfigurationError(f"Invalid configuration in {config_path}", {"errors": e.errors()})

    threads = os.environ.get(THREADS_ENV_VAR)
    if threads:
        try:
            settings.compute.threads = max(1, int(threads))
        except ValueError:
            raise ConfigurationError(f"{THREADS_ENV_VAR} must be an integer, got {threads!r}")
    level = os.environ.get(LOG_LEVEL_ENV_VAR)
    if level:
        settings.logging.level = level.upper()
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings, loaded once."""
    return load_settings()
