import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from shardkit.errors import ParameterError
from shardkit.sharing.field import DEFAULT_PRIME

ENV_SEED = "SHARDKIT_SEED"
ENV_PRIME = "SHARDKIT_PRIME"
ENV_LOG_LEVEL = "SHARDKIT_LOG_LEVEL"
ENV_LOG_FILE = "SHARDKIT_LOG_FILE"

ENUMERATION_LIMIT = 20


def _parse_int(name: str, raw: str) -> int:
    try:
        return int(raw, 10)
    except ValueError:
        raise ParameterError(f"{name} must be a decimal integer, got {raw!r}")


def parse_level(raw: str) -> int:
    level = logging.getLevelName(raw.upper())
    if not isinstance(level, int):
        raise ParameterError(f"unknown log level {raw!r}")
    return level


@dataclass
class Settings:
    prime: int = DEFAULT_PRIME
    seed: Optional[int] = None
    log_level: int = logging.WARNING
    log_file: Optional[str] = None

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        env = os.environ if environ is None else environ
        settings = cls()
        if env.get(ENV_SEED):
            settings.seed = _parse_int(ENV_SEED, env[ENV_SEED])
        if env.get(ENV_PRIME):
            settings.prime = _parse_int(ENV_PRIME, env[ENV_PRIME])
        if env.get(ENV_LOG_LEVEL):
            settings.log_level = parse_level(env[ENV_LOG_LEVEL])
        if env.get(ENV_LOG_FILE):
            settings.log_file = env[ENV_LOG_FILE]
        return settings
