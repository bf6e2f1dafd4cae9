import time
import functools
import logging


def timer(log_level=logging.INFO):
    """Log how long each call of the decorated function takes, also when it raises."""
    def decorator(func):
        logger = logging.getLogger(func.__module__)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                duration = time.perf_counter() - start
                logger.log(log_level, f"{func.__name__} took {duration:.4f} s")
        return wrapper
    return decorator
