import argparse
import logging
import os
from typing import Any, Dict, List, Optional

import yaml

logger = logging.getLogger(__name__)

# Environment variable -> config path
ENV_OVERRIDES: Dict[str, List[str]] = {
    "PREPROJ_CACHE_DIR": ["cache", "dir"],
    "PREPROJ_LOG_LEVEL": ["logging", "level"],
}

# argparse destination -> config path; None values leave the file setting alone
ARG_OVERRIDES: Dict[str, List[str]] = {
    "cache_dir": ["cache", "dir"],
    "format": ["output", "format"],
    "max_degree": ["computation", "max_degree"],
    "log_level": ["logging", "level"],
}

OUTPUT_FORMATS = ("text", "json", "latex")


class ConfigError(Exception):
    """Exception raised for invalid configuration values."""
    pass


class ConfigManager:
    """
    Layered configuration for the toolkit.

    The YAML file gives the defaults, PREPROJ_* environment variables override
    it, and command-line flags override both.
    """

    DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "default_config.yaml")

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize the configuration manager.

        Args:
            config_path: Path to a custom configuration file. If None, uses the default.
        """
        self.config_path = config_path or self.DEFAULT_CONFIG_PATH
        self.config = self._load_config()
        for env_name, path in ENV_OVERRIDES.items():
            if os.environ.get(env_name):
                self._set_nested_config(path, os.environ[env_name])

    def _load_config(self) -> Dict[str, Any]:
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
        except FileNotFoundError:
            logger.warning(f"Config file {self.config_path} not found, using built-in defaults")
            return {}
        except yaml.YAMLError as e:
            logger.warning(f"Could not parse config file {self.config_path}: {e}")
            return {}
        if not isinstance(loaded, dict):
            logger.warning(f"Config file {self.config_path} does not hold a mapping, ignoring it")
            return {}
        return loaded

    def update_from_args(self, args: argparse.Namespace) -> None:
        """
        Update configuration from command line arguments.

        Args:
            args: Parsed command line arguments

        Raises:
            ConfigError: If --max-degree is negative
        """
        for arg_name, config_path in ARG_OVERRIDES.items():
            value = getattr(args, arg_name, None)
            if value is not None:
                self._set_nested_config(config_path, value)

        # --no-cache is a switch, so only a set flag overrides the file
        if getattr(args, "no_cache", False):
            self._set_nested_config(["cache", "enabled"], False)

        max_degree = self.get("computation", "max_degree")
        if max_degree is not None and int(max_degree) < 0:
            error_msg = f"max_degree must be non-negative, got {max_degree}"
            logger.error(error_msg)
            raise ConfigError(error_msg)

    def _set_nested_config(self, path_list: List[str], value: Any) -> None:
        current = self.config
        for key in path_list[:-1]:
            if not isinstance(current.get(key), dict):
                current[key] = {}
            current = current[key]
        current[path_list[-1]] = value

    def get(self, *path: str, default: Any = None) -> Any:
        """
        Get a configuration value using a path of keys.

        Args:
            *path: Path of keys to the desired configuration value
            default: Returned when the path is missing or holds null

        Returns:
            The configuration value or the default
        """
        current = self.config
        for key in path:
            if not isinstance(current, dict) or key not in current:
                return default
            current = current[key]
        return default if current is None else current

    @property
    def output_format(self) -> str:
        fmt = self.get("output", "format", default="text")
        if fmt not in OUTPUT_FORMATS:
            logger.warning(f"Unknown output format {fmt!r}, falling back to text")
            return "text"
        return fmt

    @property
    def max_degree(self) -> Optional[int]:
        value = self.get("computation", "max_degree")
        return None if value is None else int(value)


config_manager = ConfigManager()


def get_config() -> ConfigManager:
    """Return the process-wide configuration manager."""
    return config_manager


def set_config(manager: ConfigManager) -> None:
    """
    Replace the global configuration manager (used when --config is given).

    Args:
        manager: The configuration manager to install
    """
    global config_manager
    config_manager = manager
