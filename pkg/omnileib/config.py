"""Centralised configuration for the **omnileib** project.

Provides layered configuration with precedence (highest to lowest):
1. Runtime arguments (CLI flags, keyword arguments)
2. Project config (./.omnileib/config.yaml)
3. User config (~/.config/omnileib/config.yaml)
4. Package defaults (omnileib/config.yaml)

Catalog directories are searched in order (highest priority first):
1. Project algebras (./.omnileib/algebras/)
2. User algebras (~/.config/omnileib/algebras/)
3. Package algebras (omnileib/algebras/)

Directory structure:
    ~/.config/omnileib/
        config.yaml          # User-level defaults
        algebras/            # User's catalog documents

    ./.omnileib/             # Project-specific (in project root)
        config.yaml          # Project-level defaults
        algebras/            # Project catalog documents (override user/package)

Usage
-----
>>> from omnileib.config import Config, ConfigLoader
>>> Config.get_algebras_dir()
PosixPath('.../algebras')
>>> ConfigLoader().get('max_degree')
3
"""

from __future__ import annotations

import os
import yaml
from pathlib import Path
from copy import deepcopy
from typing import Final, Optional, Dict, Any

__all__: Final[list[str]] = ["Config", "ConfigLoader"]


class Config:
    """Namespace that exposes project-wide constants as *class attributes*."""

    # ------------------------------------------------------------------ #
    # Paths                                                              #
    # ------------------------------------------------------------------ #
    PACKAGE_DIR: Final[Path] = Path(__file__).resolve().parent
    PROJECT_ROOT: Final[Path] = PACKAGE_DIR.parent

    # ------------------------------------------------------------------ #
    # Computation defaults                                               #
    # ------------------------------------------------------------------ #
    _DEFAULT_MAX_DEGREE: Final[int] = 3
    DEGREE_CAP: Final[int] = 6
    MAX_COEFFICIENTS: Final[int] = 10**6
    _DEFAULT_SEED: Final[int] = 0
    _DEFAULT_TRIALS: Final[int] = 200
    _DEFAULT_WORKERS: Final[int] = 1

    # Keys understood by ConfigLoader; anything else in a YAML file is ignored.
    SETTINGS_KEYS: Final[tuple[str, ...]] = (
        "max_degree",
        "seed",
        "trials",
        "workers",
        "validate",
    )

    # ------------------------------------------------------------------ #
    # Logging                                                            #
    # ------------------------------------------------------------------ #
    _DEFAULT_LOG_FILE: Final[str] = "omnileib.log"

    # ------------------------------------------------------------------ #
    # Methods that read environment - only when explicitly called       #
    # ------------------------------------------------------------------ #
    @classmethod
    def get_log_file_path(cls) -> Path:
        """Get log file path from environment or use default."""
        return Path(os.getenv("OMNILEIB_LOG_FILE", cls.PROJECT_ROOT / cls._DEFAULT_LOG_FILE))

    @classmethod
    def get_default_max_degree(cls) -> int:
        """Get default top degree from environment, clamped to the hard cap."""
        try:
            value = int(os.getenv("OMNILEIB_MAX_DEGREE", str(cls._DEFAULT_MAX_DEGREE)))
        except ValueError:
            return cls._DEFAULT_MAX_DEGREE
        return max(0, min(value, cls.DEGREE_CAP))

    @classmethod
    def get_default_workers(cls) -> int:
        """Get the number of rank workers from environment or use default."""
        try:
            return max(1, int(os.getenv("OMNILEIB_WORKERS", str(cls._DEFAULT_WORKERS))))
        except ValueError:
            return cls._DEFAULT_WORKERS

    @classmethod
    def get_default_seed(cls) -> int:
        return cls._DEFAULT_SEED

    @classmethod
    def get_default_trials(cls) -> int:
        return cls._DEFAULT_TRIALS

    # User config directory
    _USER_CONFIG_DIR: Final[Path] = Path.home() / ".config" / "omnileib"

    @classmethod
    def get_algebras_dir(cls) -> Path:
        """Get the packaged catalog directory from environment or use default."""
        return Path(os.getenv("OMNILEIB_DEFAULT_ALGEBRAS_DIR", cls.PACKAGE_DIR / "algebras"))

    @classmethod
    def get_algebras_dirs(cls, project_dir: Optional[Path] = None) -> list[Path]:
        """Get all catalog directories in search order (highest priority first).

        Search order:
        1. Project algebras (.omnileib/algebras/)
        2. User algebras (~/.config/omnileib/algebras/)
        3. Package algebras (omnileib/algebras/)
        """
        dirs = []
        if project_dir:
            project_algebras = project_dir / ".omnileib" / "algebras"
        else:
            project_algebras = Path.cwd() / ".omnileib" / "algebras"
        if project_algebras.exists():
            dirs.append(project_algebras)
        user_algebras = cls._USER_CONFIG_DIR / "algebras"
        if user_algebras.exists():
            dirs.append(user_algebras)
        dirs.append(cls.get_algebras_dir())
        return dirs

    @classmethod
    def get_config_file(cls) -> Path:
        """Get the package defaults file from environment or use default."""
        return Path(os.getenv("OMNILEIB_DEFAULT_CONFIG_FILE", cls.PACKAGE_DIR / "config.yaml"))

    @classmethod
    def dotenv_disabled(cls) -> bool:
        return bool(os.getenv("OMNILEIB_DISABLE_DOTENV"))

    # ------------------------------------------------------------------ #
    # Dunder methods                                                     #
    # ------------------------------------------------------------------ #
    __slots__ = ()

    def __new__(cls, *_, **__) -> "Config":
        """Prevent instantiation – use as a static namespace instead."""
        raise TypeError(
            "`Config` cannot be instantiated; use class attributes directly."
        )

    def __setattr__(self, *_: object) -> None:  # noqa: D401
        """Disallow runtime mutation of configuration values."""
        raise AttributeError("Config is read-only – do not mutate class attributes.")


class ConfigLoader:
    """Loads and merges configuration from multiple sources.

    Configuration sources (highest to lowest priority):
    1. Runtime overrides (passed to methods)
    2. Project config (./.omnileib/config.yaml)
    3. User config (~/.config/omnileib/config.yaml)
    4. Package defaults (omnileib/config.yaml, then Config constants)
    """

    _USER_CONFIG_PATH = Path.home() / ".config" / "omnileib" / "config.yaml"
    _PROJECT_CONFIG_NAME = Path(".omnileib") / "config.yaml"

    def __init__(self, project_dir: Optional[Path] = None):
        """Initialize ConfigLoader.

        Args:
            project_dir: Project directory to search for .omnileib/config.yaml.
                        If None, uses current working directory.
        """
        self._project_dir = Path(project_dir) if project_dir else Path.cwd()
        self._package_config: Dict[str, Any] = {}
        self._user_config: Dict[str, Any] = {}
        self._project_config: Dict[str, Any] = {}
        self._merged_config: Dict[str, Any] = {}
        self._load_configs()

    def _load_configs(self) -> None:
        """Load configuration from all sources and merge them."""
        self._package_config = self._load_yaml(Config.get_config_file())
        self._user_config = self._load_yaml(self._USER_CONFIG_PATH)
        project_config_path = self._project_dir / self._PROJECT_CONFIG_NAME
        self._project_config = self._load_yaml(project_config_path)

        merged = self._deep_merge(self._package_config, self._user_config)
        self._merged_config = self._deep_merge(merged, self._project_config)

    def _load_yaml(self, path: Path) -> Dict[str, Any]:
        """Load YAML file, returning empty dict if not found."""
        if not path.exists():
            return {}
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
                return data if isinstance(data, dict) else {}
        except Exception:
            return {}

    def _deep_merge(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """Deep merge two dictionaries, with override taking precedence."""
        result = deepcopy(base)
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = deepcopy(value)
        return result

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value.

        Args:
            key: Configuration key (e.g., 'max_degree', 'seed', 'workers')
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        return self._merged_config.get(key, default)

    def get_max_degree(self) -> int:
        value = self.get('max_degree')
        if value is None:
            return Config.get_default_max_degree()
        return max(0, min(int(value), Config.DEGREE_CAP))

    def get_workers(self) -> int:
        value = self.get('workers')
        return Config.get_default_workers() if value is None else max(1, int(value))

    def resolve_with_overrides(
        self,
        max_degree: Optional[int] = None,
        seed: Optional[int] = None,
        trials: Optional[int] = None,
        workers: Optional[int] = None,
        validate: Optional[bool] = None,
    ) -> Dict[str, Any]:
        """Resolve configuration with runtime overrides.

        Returns:
            Fully resolved settings dict with every key of Config.SETTINGS_KEYS
        """
        result = {key: deepcopy(self._merged_config[key])
                  for key in Config.SETTINGS_KEYS if key in self._merged_config}

        if max_degree is not None:
            result['max_degree'] = max_degree
        if seed is not None:
            result['seed'] = seed
        if trials is not None:
            result['trials'] = trials
        if workers is not None:
            result['workers'] = workers
        if validate is not None:
            result['validate'] = validate

        # Fill in hard-coded defaults for missing values
        result.setdefault('max_degree', Config.get_default_max_degree())
        result.setdefault('seed', Config.get_default_seed())
        result.setdefault('trials', Config.get_default_trials())
        result.setdefault('workers', Config.get_default_workers())
        result.setdefault('validate', True)
        return result

    def save_user_config(self, config: Dict[str, Any]) -> None:
        """Save configuration to user config file."""
        self._USER_CONFIG_PATH.parent.mkdir(parents=True, exist_ok=True)
        with open(self._USER_CONFIG_PATH, 'w', encoding='utf-8') as f:
            yaml.safe_dump(config, f, default_flow_style=False, sort_keys=False)
        self._load_configs()

    def save_project_config(self, config: Dict[str, Any]) -> None:
        """Save configuration to project config file."""
        project_config_path = self._project_dir / self._PROJECT_CONFIG_NAME
        project_config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(project_config_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(config, f, default_flow_style=False, sort_keys=False)
        self._load_configs()

    @property
    def user_config_path(self) -> Path:
        """Get the user config file path."""
        return self._USER_CONFIG_PATH

    @property
    def project_config_path(self) -> Path:
        """Get the project config file path."""
        return self._project_dir / self._PROJECT_CONFIG_NAME

    @property
    def has_user_config(self) -> bool:
        return self._USER_CONFIG_PATH.exists()

    @property
    def has_project_config(self) -> bool:
        return (self._project_dir / self._PROJECT_CONFIG_NAME).exists()
