import logging
import time
from contextlib import contextmanager
from typing import Iterator, Optional

from shardkit.errors import ShardkitError


@contextmanager
def log_time(label: str, logger: Optional[logging.Logger] = None) -> Iterator[None]:
    """Log how long a block took; a failure is logged with the exit code it maps to."""
    if logger is None:
        logger = logging.getLogger(__name__)
    start = time.perf_counter()
    try:
        yield
    except ShardkitError as exc:
        duration = time.perf_counter() - start
        logger.info(f"{label} failed in {duration:.4f}s (exit {exc.exit_code}: {exc})")
        raise
    except Exception as exc:
        duration = time.perf_counter() - start
        logger.error(f"{label} failed in {duration:.4f}s (exc: {exc})")
        raise
    logger.info(f"{label} finished in {time.perf_counter() - start:.4f}s")
