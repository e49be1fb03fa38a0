import json
import logging
import os
import tempfile
import time
from typing import Any, Optional

from config.config_manager import get_config

logger = logging.getLogger(__name__)


class FileOperationError(Exception):
    """Exception raised for file operation errors."""
    pass


def ensure_directory(directory_path: str) -> None:
    """
    Create a directory (and parents) if it does not exist yet.

    Raises:
        FileOperationError: If directory creation fails
    """
    if not directory_path:
        return
    try:
        os.makedirs(directory_path, exist_ok=True)
    except OSError as e:
        error_msg = f"Failed to create directory {directory_path}: {str(e)}"
        logger.error(error_msg)
        raise FileOperationError(error_msg)


def load_json(file_path: str) -> Any:
    """
    Load data from a JSON file.

    Args:
        file_path: Path to the JSON file

    Returns:
        Parsed JSON data

    Raises:
        FileOperationError: If the file is missing, unreadable or not valid JSON
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        # Cache misses land here, so this is not an error on its own
        error_msg = f"File not found: {file_path}"
        logger.debug(error_msg)
        raise FileOperationError(error_msg)
    except json.JSONDecodeError as e:
        error_msg = f"Invalid JSON in {file_path}: {str(e)}"
        logger.error(error_msg)
        raise FileOperationError(error_msg)
    except OSError as e:
        error_msg = f"Error loading {file_path}: {str(e)}"
        logger.error(error_msg)
        raise FileOperationError(error_msg)


def save_json(data: Any, file_path: str) -> None:
    """
    Write data as indented JSON.

    The file is written next to its destination and renamed into place, so an
    interrupted run never leaves a truncated cache blob or report behind.

    Args:
        data: JSON-serializable data
        file_path: Destination path; missing parent directories are created

    Raises:
        FileOperationError: If the data cannot be serialized or written
    """
    directory = os.path.dirname(file_path)
    ensure_directory(directory)
    tmp_path = None
    try:
        with tempfile.NamedTemporaryFile('w', encoding='utf-8', dir=directory or '.', suffix='.tmp',
                                         delete=False) as f:
            tmp_path = f.name
            json.dump(data, f, ensure_ascii=False, indent=2)
        os.replace(tmp_path, file_path)
        logger.debug(f"Saved JSON to {file_path}")
    except (OSError, TypeError, ValueError) as e:
        if tmp_path and os.path.exists(tmp_path):
            os.remove(tmp_path)
        error_msg = f"Error saving to {file_path}: {str(e)}"
        logger.error(error_msg)
        raise FileOperationError(error_msg)


class DirectoryManager:
    """
    Standard locations for basis caches and verification reports.

    Both directories come from the configuration (cache.dir, output.reports_dir)
    and fall back to the class defaults.
    """

    CACHE_DIR = "cache"
    REPORTS_DIR = os.path.join("outputs", "reports")

    @classmethod
    def get_cache_path(cls, filename: str, cache_dir: Optional[str] = None) -> str:
        directory = cache_dir or get_config().get("cache", "dir", default=cls.CACHE_DIR)
        ensure_directory(directory)
        return os.path.join(directory, filename)

    @classmethod
    def get_report_path(cls, report_name: str, reports_dir: Optional[str] = None) -> str:
        directory = reports_dir or get_config().get("output", "reports_dir", default=cls.REPORTS_DIR)
        ensure_directory(directory)
        return os.path.join(directory, report_name)


def generate_report_path(prefix: str, suffix: str = ".json", reports_dir: Optional[str] = None) -> str:
    """
    Generate a timestamped report file path, e.g. outputs/reports/verify_20240917_101500.json.

    Args:
        prefix: File name prefix (usually the command name)
        suffix: File extension
        reports_dir: Reports directory (default: output.reports_dir from the config)

    Returns:
        Generated file path
    """
    timestamp = time.strftime("%Y%m%d_%H%M%S")
    return DirectoryManager.get_report_path(f"{prefix}_{timestamp}{suffix}", reports_dir)
