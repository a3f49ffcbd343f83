"""
Lab Configuration

Loads ``lab.config.yaml`` over built-in defaults. Missing or broken files fall
back to the defaults with a warning.
"""

import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from laskerlab.utils.errors import ValidationError

logger = logging.getLogger(__name__)

CONFIG_FILENAME = "lab.config.yaml"

DEFAULT_CONFIG: Dict[str, Any] = {
    "rings": {
        "size_cap": 4096,
        "axiom_check_limit": 64,
    },
    "corpus": {
        "max_modulus": 60,
        "product_size_cap": 64,
        "boolean_ranks": [2, 3, 4],
        "poly_quotients": [
            {"p": 2, "f": [1, 0, 0]},
            {"p": 2, "f": [1, 1, 1]},
            {"p": 3, "f": [1, 0, 0]},
        ],
        "idealizations": [
            {"n": 4, "m": 2},
            {"n": 2, "m": 2},
            {"n": 9, "m": 3},
        ],
        "size_cap": 64,
        "seed": 0,
    },
    "suites": {
        "workers": 1,
        "integer_bound": 200,
    },
    "logging": {
        "level": "WARNING",
        "format": "simple",
    },
}


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _locate_config(path: Optional[Path]) -> Optional[Path]:
    if path is not None:
        return Path(path)
    env_path = os.getenv("LASKERLAB_CONFIG")
    if env_path:
        return Path(env_path)
    local = Path(CONFIG_FILENAME)
    return local if local.exists() else None


def load_lab_config(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load the lab configuration with defaults.

    Args:
        path: Explicit configuration file; overrides ``LASKERLAB_CONFIG`` and
            the working-directory lookup

    Returns:
        Configuration dictionary with every default key present
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    config_file = _locate_config(path)

    if config_file is not None:
        try:
            with open(config_file, 'r') as f:
                loaded = yaml.safe_load(f) or {}
            if not isinstance(loaded, dict):
                raise ValueError("top level must be a mapping")
            config = _deep_merge(config, loaded)
            logger.debug(f"Loaded lab config from {config_file}")
        except Exception as e:
            logger.warning(f"Could not load lab config {config_file}, using defaults: {e}")

    env_cap = _environment_size_cap()
    if env_cap is not None:
        config["rings"]["size_cap"] = env_cap

    return config


def _environment_size_cap() -> Optional[int]:
    env_cap = os.getenv("LASKERLAB_SIZE_CAP")
    if not env_cap:
        return None
    try:
        return int(env_cap)
    except ValueError:
        raise ValidationError(f"LASKERLAB_SIZE_CAP must be an integer, got {env_cap!r}")


def default_size_cap() -> int:
    """Size cap for library calls that pass none: LASKERLAB_SIZE_CAP, else the built-in default."""
    env_cap = _environment_size_cap()
    return DEFAULT_CONFIG["rings"]["size_cap"] if env_cap is None else env_cap
