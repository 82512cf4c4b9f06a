from __future__ import annotations

from dataclasses import dataclass, field
import os
from typing import Any, Optional

import yaml

from .errors import ConfigError
from .types import Strategy

DEFAULT_FUEL = 1_000_000


@dataclass
class KernelConfig:
    fuel: int = DEFAULT_FUEL
    eta: bool = False
    strategy: str = Strategy.LEFTMOST_OUTERMOST.value
    memo: bool = False


@dataclass
class SolverConfig:
    bound: int = 10
    threads: int = 1


@dataclass
class PrfConfig:
    jets: bool = True


@dataclass
class LogConfig:
    dir: Optional[str] = None
    max_bytes: int = 64 * 1024 * 1024


@dataclass
class AppConfig:
    kernel: KernelConfig = field(default_factory=KernelConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    prf: PrfConfig = field(default_factory=PrfConfig)
    log: LogConfig = field(default_factory=LogConfig)


def _section(raw: dict, key: str) -> dict:
    value = raw.get(key)
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ConfigError(f"config section {key!r} must be a mapping")
    return value


def _build(cls: Any, raw: dict, key: str) -> Any:
    try:
        return cls(**_section(raw, key))
    except TypeError as exc:
        raise TypeError(f"invalid keys in config section {key!r}: {exc}") from exc


def default_config() -> AppConfig:
    return AppConfig()


def load_config(path: str) -> AppConfig:
    with open(path, "r", encoding="utf-8") as handle:
        raw = yaml.safe_load(handle) or {}
    if not isinstance(raw, dict):
        raise ConfigError(f"config root must be a mapping: {path}")

    config = AppConfig(
        kernel=_build(KernelConfig, raw, "kernel"),
        solver=_build(SolverConfig, raw, "solver"),
        prf=_build(PrfConfig, raw, "prf"),
        log=_build(LogConfig, raw, "log"),
    )
    validate_config(config)
    return config


def validate_config(config: AppConfig) -> None:
    if config.kernel.fuel < 0:
        raise ConfigError("kernel.fuel must be >= 0")
    try:
        Strategy.parse(config.kernel.strategy)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if config.solver.bound < 0:
        raise ConfigError("solver.bound must be >= 0")
    if config.solver.threads < 1:
        raise ConfigError("solver.threads must be >= 1")
    if config.log.max_bytes < 0:
        raise ConfigError("log.max_bytes must be >= 0")


def apply_env_overrides(config: AppConfig) -> None:
    def _env_bool(name: str) -> bool | None:
        raw = os.getenv(name)
        if raw is None or raw == "":
            return None
        return raw.strip().lower() in {"1", "true", "yes", "on"}

    def _env_int(name: str) -> int | None:
        raw = os.getenv(name)
        if raw is None or raw == "":
            return None
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc

    fuel = _env_int("LAM_FUEL")
    if fuel is not None:
        config.kernel.fuel = fuel

    eta = _env_bool("LAM_ETA")
    if eta is not None:
        config.kernel.eta = eta

    strategy = os.getenv("LAM_STRATEGY")
    if strategy:
        config.kernel.strategy = strategy

    memo = _env_bool("LAM_MEMO")
    if memo is not None:
        config.kernel.memo = memo

    bound = _env_int("LAM_BOUND")
    if bound is not None:
        config.solver.bound = bound

    threads = _env_int("LAM_THREADS")
    if threads is not None:
        config.solver.threads = threads

    jets = _env_bool("PRF_JETS")
    if jets is not None:
        config.prf.jets = jets

    log_dir = os.getenv("LOG_DIR")
    if log_dir:
        config.log.dir = log_dir

    max_bytes = _env_int("LOG_ROTATE_MAX_BYTES")
    if max_bytes is not None:
        config.log.max_bytes = max_bytes

    validate_config(config)
