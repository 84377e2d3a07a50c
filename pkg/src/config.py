"""
Configuration loading: YAML merged over built-in defaults.
"""

import copy
import os
from typing import Any, Dict, Optional

import yaml

from src.custom_exceptions import InvalidConfigurationError, MissingConfigurationError
from src.logging_config import get_logger

logger = get_logger(__name__)

DEFAULT_CONFIG_PATH = "config.yaml"

DEFAULTS: Dict[str, Any] = {
    "exhaustive": {"budget": 10 ** 6, "jobs": 1, "projective": True},
    "output": {"order": "row"},
    "logging": {"level": "WARNING", "format": "human", "file": None},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def validate_config(config: Dict[str, Any]) -> None:
    """
    Raises:
        InvalidConfigurationError: If a known key has the wrong type or range
    """
    exhaustive = config["exhaustive"]
    for key in ("budget", "jobs"):
        value = exhaustive.get(key)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise InvalidConfigurationError(f"exhaustive.{key}", "expected a positive integer")
    if not isinstance(exhaustive.get("projective"), bool):
        raise InvalidConfigurationError("exhaustive.projective", "expected true or false")
    if config["output"].get("order") not in ("row", "col"):
        raise InvalidConfigurationError("output.order", "expected 'row' or 'col'")
    log = config["logging"]
    if str(log.get("level", "")).upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise InvalidConfigurationError("logging.level", f"unknown level {log.get('level')!r}")
    if log.get("format") not in ("human", "json"):
        raise InvalidConfigurationError("logging.format", "expected 'human' or 'json'")


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from a YAML file and merge it over the defaults.

    Args:
        config_path: Path to the config file; when omitted, ``config.yaml`` in
            the working directory is used if present

    Returns:
        Dictionary containing configuration

    Raises:
        MissingConfigurationError: If an explicitly given file does not exist
        InvalidConfigurationError: If the file is not valid YAML or has bad values
    """
    if config_path is None:
        if not os.path.exists(DEFAULT_CONFIG_PATH):
            return copy.deepcopy(DEFAULTS)
        config_path = DEFAULT_CONFIG_PATH
    elif not os.path.exists(config_path):
        logger.error(f"Config file not found: {config_path}",
                     context={"config_path": config_path})
        raise MissingConfigurationError("config_file")

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        logger.error(f"Failed to parse YAML in config file: {e}",
                     context={"config_path": config_path})
        raise InvalidConfigurationError("config_file", f"Invalid YAML format: {e}")
    if not isinstance(loaded, dict):
        raise InvalidConfigurationError("config_file", "top level must be a mapping")
    for section in ("exhaustive", "output", "logging"):
        if section in loaded and not isinstance(loaded[section], dict):
            raise InvalidConfigurationError(section, "expected a mapping")

    config = _merge(DEFAULTS, loaded)
    validate_config(config)
    logger.debug("Configuration loaded", context={"config_path": config_path})
    return config
