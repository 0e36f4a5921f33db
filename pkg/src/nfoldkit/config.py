"""Configuration management for nfoldkit."""

from __future__ import annotations

import json
import logging
from pathlib import Path

from platformdirs import user_config_dir, user_data_dir
from pydantic import ValidationError

from .core.models import SolverConfig

logger = logging.getLogger(__name__)

# Default configuration paths
APP_NAME = "nfoldkit"
CONFIG_DIR = Path(user_config_dir(APP_NAME))
DATA_DIR = Path(user_data_dir(APP_NAME))
CONFIG_FILE = CONFIG_DIR / "config.json"


class ConfigManager:
    """Loads and saves the solver configuration."""

    def __init__(self, config_path: Path | None = None) -> None:
        self.config_path = config_path or CONFIG_FILE
        self._config: SolverConfig | None = None

    def load(self) -> SolverConfig:
        """Load configuration from file or fall back to defaults."""
        if self._config is not None:
            return self._config

        if self.config_path.exists():
            try:
                config_data = json.loads(self.config_path.read_text(encoding="utf-8"))
                self._config = SolverConfig(**config_data)
                logger.info(f"Loaded configuration from {self.config_path}")
            except (json.JSONDecodeError, TypeError, ValidationError) as e:
                logger.warning(f"Invalid config file {self.config_path}: {e}")
                logger.info("Using default configuration")
                self._config = SolverConfig()
        else:
            self._config = SolverConfig()
            logger.debug("Using default configuration")

        self._config = self._resolve_paths(self._config)
        return self._config

    def save(self, config: SolverConfig | None = None) -> None:
        """Save configuration to file; failures are logged, not raised."""
        if config is not None:
            self._config = config

        if self._config is None:
            logger.warning("No configuration to save")
            return

        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            config_dict = self._config.model_dump(mode="json")
            self.config_path.write_text(json.dumps(config_dict, indent=2), encoding="utf-8")
            logger.info(f"Saved configuration to {self.config_path}")
        except OSError as e:
            logger.error(f"Failed to write config file: {e}")
        except (TypeError, ValueError) as e:
            logger.error(f"Failed to serialize config: {e}")

    def reset(self) -> SolverConfig:
        """Reset to default configuration."""
        self._config = self._resolve_paths(SolverConfig())
        return self._config

    def _resolve_paths(self, config: SolverConfig) -> SolverConfig:
        """Resolve a relative logs directory against the user data directory."""
        if config.logs_dir.is_absolute():
            return config
        return config.model_copy(update={"logs_dir": DATA_DIR / config.logs_dir})


def load_config(config_path: Path | None = None) -> SolverConfig:
    """Load configuration (convenience function)."""
    return ConfigManager(config_path).load()


def save_config(config: SolverConfig, config_path: Path | None = None) -> None:
    """Save configuration (convenience function)."""
    ConfigManager(config_path).save(config)


def get_default_config() -> SolverConfig:
    """Default configuration with resolved paths."""
    return ConfigManager()._resolve_paths(SolverConfig())
