import logging
import sys
from logging.handlers import RotatingFileHandler

from shardkit.utils import LogConfig, LoggingPolicy
from shardkit.utils.settings import Settings


def test_console_handler_writes_to_stderr():
    LoggingPolicy(LogConfig(level=logging.INFO))
    root = logging.getLogger()
    assert root.level == logging.INFO
    assert len(root.handlers) == 1
    assert root.handlers[0].stream is sys.stderr


def test_file_handler_creates_parent_directory(tmp_path):
    log_file = tmp_path / "logs" / "shardkit.log"
    LoggingPolicy(LogConfig(file_path=str(log_file), console_output=False))
    root = logging.getLogger()
    assert [type(h) for h in root.handlers] == [RotatingFileHandler]
    assert log_file.parent.is_dir()

    logging.getLogger("shardkit.deal").warning("dealt")
    root.handlers[0].flush()
    assert "shardkit.deal - WARNING - dealt" in log_file.read_text()
    root.handlers[0].close()


def test_config_from_settings():
    config = LogConfig.from_settings(Settings(log_level=logging.DEBUG, log_file="cli.log"))
    assert (config.level, config.file_path) == (logging.DEBUG, "cli.log")
    assert LogConfig.from_settings(Settings()).level == logging.WARNING


def test_applying_twice_replaces_handlers():
    LoggingPolicy(LogConfig())
    LoggingPolicy(LogConfig(level=logging.DEBUG))
    root = logging.getLogger()
    assert root.level == logging.DEBUG
    assert len(root.handlers) == 1
