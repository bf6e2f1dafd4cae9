from .timer import timer
from .logging_policy import LogConfig, LoggingPolicy
from .context_utils import log_time

__all__ = [
    'timer',
    'LogConfig',
    'LoggingPolicy',
    'log_time',
]
