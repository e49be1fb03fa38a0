import logging
import os
import sys
from typing import Optional

from config.config_manager import get_config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(log_level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Configure the root logger for a command run.

    Records go to stderr so that stdout carries only command output and the
    JSON and LaTeX reports stay machine-readable. Calling this again replaces
    the handlers of the previous call.

    Args:
        log_level: DEBUG, INFO, WARNING or ERROR (default: logging.level from the config)
        log_file: Also append records to this file (default: logging.file from the config)
    """
    config = get_config()
    log_level = str(log_level or config.get("logging", "level", default="INFO")).upper()
    log_file = log_file or config.get("logging", "file")

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, log_level, logging.INFO))
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    formatter = logging.Formatter(LOG_FORMAT)
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        if os.path.dirname(log_file):
            os.makedirs(os.path.dirname(log_file), exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    for handler in handlers:
        handler.setFormatter(formatter)
        root_logger.addHandler(handler)

    logging.debug(f"Logging initialized at {log_level}" + (f", also writing to {log_file}" if log_file else ""))


def progress_enabled() -> bool:
    """tqdm bars are shown at INFO and below, hidden at WARNING and above."""
    return logging.getLogger().getEffectiveLevel() <= logging.INFO
