"""
Configuration management for the preprojective Hochschild toolkit.
"""

from config.config_manager import (
    ConfigManager,
    ConfigError,
    get_config,
    set_config
)

__all__ = ['ConfigManager', 'ConfigError', 'get_config', 'set_config']
