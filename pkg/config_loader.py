"""Configuration loader with YAML support and environment variable substitution."""

import copy
import os
import re
from typing import Any, Dict, Optional

import yaml

from logger import LEVELS

GB_LIMIT_ENV = 'KOSZUL_GB_LIMIT'

DEFAULTS: Dict[str, Any] = {
    'groebner': {
        'max_pairs': None,
        'debug_recompute': False,
    },
    'graphs': {
        'labeling_bound': 9,
        'search_workers': 4,
    },
    'lattice': {
        'poset_bound': 6,
        'lattice_bound': 16,
    },
    'koszul': {
        'workers': 4,
        'minimality_exhaustive_bound': 12,
        'progress_bars': False,
    },
    'cli': {
        'certify': False,
    },
    'logging': {
        'level': 'WARNING',
        'file': None,
        'format': None,
        'date_format': None,
    },
}

_POSITIVE_INTS = (
    'graphs.labeling_bound',
    'graphs.search_workers',
    'lattice.poset_bound',
    'lattice.lattice_bound',
    'koszul.workers',
    'koszul.minimality_exhaustive_bound',
)

_BOOLEANS = (
    'groebner.debug_recompute',
    'koszul.progress_bars',
    'cli.certify',
)


class ConfigLoader:
    """Handles loading and validation of configuration files."""

    ENV_VAR_PATTERN = re.compile(r'\$\{([A-Za-z_][A-Za-z0-9_]*)\}')

    @classmethod
    def defaults(cls) -> Dict[str, Any]:
        return copy.deepcopy(DEFAULTS)

    @classmethod
    def load(cls, config_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Load configuration from a YAML file layered over the defaults.

        Args:
            config_path: Path to YAML configuration file; defaults only when None

        Returns:
            Parsed configuration dictionary

        Raises:
            FileNotFoundError: If config file doesn't exist
            ValueError: If the file does not hold a mapping
            yaml.YAMLError: If YAML parsing fails
        """
        config = cls.defaults()
        if config_path is None:
            return config

        if not os.path.exists(config_path):
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with open(config_path, 'r', encoding='utf-8') as f:
            config_data = yaml.safe_load(f)

        if config_data is None:
            return config
        if not isinstance(config_data, dict):
            raise ValueError("Configuration file must contain a dictionary")

        config_data = cls._substitute_env_vars_recursive(config_data)
        return _deep_merge(config, config_data)

    @classmethod
    def apply_environment(cls, config: Dict[str, Any]) -> Dict[str, Any]:
        """Apply ``KOSZUL_GB_LIMIT`` on top of ``groebner.max_pairs``.

        Raises:
            ValueError: If the variable is set but not a positive integer
        """
        raw = os.getenv(GB_LIMIT_ENV)
        if raw is None or raw.strip() == '':
            return config
        try:
            limit = int(raw)
        except ValueError:
            raise ValueError(f"{GB_LIMIT_ENV} must be a positive integer, got '{raw}'")
        if limit < 1:
            raise ValueError(f"{GB_LIMIT_ENV} must be a positive integer, got '{raw}'")
        merged = copy.deepcopy(config)
        merged.setdefault('groebner', {})['max_pairs'] = limit
        return merged

    @classmethod
    def validate(cls, config: Dict[str, Any]) -> None:
        """
        Validate configuration values.

        Args:
            config: Configuration dictionary to validate

        Raises:
            ValueError: If validation fails, naming the offending key
        """
        max_pairs = get_nested(config, 'groebner.max_pairs')
        if max_pairs is not None and (isinstance(max_pairs, bool) or not isinstance(max_pairs, int) or max_pairs < 1):
            raise ValueError("groebner.max_pairs must be a positive integer or null")

        for key in _POSITIVE_INTS:
            value = get_nested(config, key, get_nested(DEFAULTS, key))
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{key} must be a positive integer")

        for key in _BOOLEANS:
            value = get_nested(config, key, get_nested(DEFAULTS, key))
            if not isinstance(value, bool):
                raise ValueError(f"{key} must be a boolean")

        level = get_nested(config, 'logging.level', 'WARNING')
        if not isinstance(level, str) or level.upper() not in LEVELS:
            raise ValueError(f"logging.level must be one of: {', '.join(LEVELS)}")

        for key in ('logging.file', 'logging.format', 'logging.date_format'):
            value = get_nested(config, key)
            if value is not None and not isinstance(value, str):
                raise ValueError(f"{key} must be a string")
            if isinstance(value, str) and '${' in value:
                match = cls.ENV_VAR_PATTERN.search(value)
                var_name = match.group(1) if match else value
                raise ValueError(
                    f"Configuration field '{key}' contains unsubstituted environment variable: {value}. "
                    f"Please set the {var_name} environment variable or provide a value in config file."
                )

    @classmethod
    def merge_with_args(cls, config: Dict[str, Any], args) -> Dict[str, Any]:
        """
        Merge configuration with CLI arguments; CLI arguments take precedence.

        Args:
            config: Base configuration dictionary
            args: Parsed CLI arguments

        Returns:
            Merged configuration dictionary
        """
        merged = copy.deepcopy(config)
        for section in ('cli', 'logging', 'koszul'):
            merged.setdefault(section, {})

        if getattr(args, 'certify', False):
            merged['cli']['certify'] = True

        verbose = getattr(args, 'verbose', 0) or 0
        if verbose >= 2:
            merged['logging']['level'] = 'DEBUG'
        elif verbose == 1:
            merged['logging']['level'] = 'INFO'

        if getattr(args, 'workers', None):
            merged['koszul']['workers'] = args.workers

        if getattr(args, 'progress', False):
            merged['koszul']['progress_bars'] = True

        return merged

    @classmethod
    def _substitute_env_vars_recursive(cls, data: Any) -> Any:
        """Recursively substitute environment variables in data structure."""
        if isinstance(data, dict):
            return {key: cls._substitute_env_vars_recursive(value) for key, value in data.items()}
        elif isinstance(data, list):
            return [cls._substitute_env_vars_recursive(item) for item in data]
        elif isinstance(data, str):
            return cls._substitute_env_vars(data)
        else:
            return data

    @classmethod
    def _substitute_env_vars(cls, value: str) -> Any:
        """Substitute environment variables; a value that is exactly ``${VAR}`` is re-read as YAML."""
        def replace_match(match):
            env_value = os.getenv(match.group(1))
            return env_value if env_value is not None else match.group(0)

        substituted = cls.ENV_VAR_PATTERN.sub(replace_match, value)
        if substituted != value and cls.ENV_VAR_PATTERN.fullmatch(value):
            return yaml.safe_load(substituted)
        return substituted


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def get_nested(config: dict, path: str, default: Any = None) -> Any:
    """Safely retrieve nested configuration values using dot notation.

    Args:
        config: Configuration dictionary
        path: Dot-separated path (e.g., "groebner.max_pairs")
        default: Default value if path doesn't exist

    Returns:
        Value at the nested path or default
    """
    value = config
    for key in path.split('.'):
        if isinstance(value, dict) and key in value:
            value = value[key]
        else:
            return default
    return value


__all__ = ['ConfigLoader', 'DEFAULTS', 'GB_LIMIT_ENV', 'get_nested']
