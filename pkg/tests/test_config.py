"""Tests for configuration management."""

import json
import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from nfoldkit.config import DATA_DIR, ConfigManager, get_default_config, load_config, save_config
from nfoldkit.core.models import SolverConfig


@pytest.fixture
def temp_config_dir():
    """Create temporary config directory."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


def test_config_manager_initialization(temp_config_dir):
    """Test configuration manager initialization."""
    config_path = temp_config_dir / "config.json"
    manager = ConfigManager(config_path)

    assert manager.config_path == config_path


def test_config_loading_default(temp_config_dir):
    """Test loading default configuration when file doesn't exist."""
    config = ConfigManager(temp_config_dir / "config.json").load()

    assert isinstance(config, SolverConfig)
    assert config.enumeration_budget == 2_000_000
    assert config.max_workers == 1
    assert config.log_to_file is False


def test_config_saving_and_loading(temp_config_dir):
    """Test saving and loading configuration."""
    config_path = temp_config_dir / "config.json"
    manager = ConfigManager(config_path)

    config = manager.load()
    config.enumeration_budget = 5000
    config.max_workers = 4
    manager.save()

    loaded = ConfigManager(config_path).load()
    assert loaded.enumeration_budget == 5000
    assert loaded.max_workers == 4


def test_config_validation(temp_config_dir):
    """Test that an invalid file falls back to defaults."""
    config_path = temp_config_dir / "config.json"
    config_path.write_text(json.dumps({"enumeration_budget": "many", "max_workers": 2}))

    config = ConfigManager(config_path).load()
    assert config.enumeration_budget == 2_000_000
    assert config.max_workers == 1


def test_config_unknown_field(temp_config_dir):
    """Test that unknown keys also fall back to defaults."""
    config_path = temp_config_dir / "config.json"
    config_path.write_text(json.dumps({"audio_format": "mp3"}))

    assert ConfigManager(config_path).load() == get_default_config()


def test_config_corrupted_file(temp_config_dir):
    """Test handling of corrupted configuration file."""
    config_path = temp_config_dir / "config.json"
    config_path.write_text("invalid json {broken")

    config = ConfigManager(config_path).load()
    assert isinstance(config, SolverConfig)
    assert config.graver_budget == 2_000_000


def test_config_directory_creation(temp_config_dir):
    """Test automatic creation of config directory."""
    nested_path = temp_config_dir / "nested" / "config" / "config.json"

    manager = ConfigManager(nested_path)
    manager.load()
    manager.save()

    assert nested_path.exists()
    assert nested_path.parent.is_dir()


def test_config_reset(temp_config_dir):
    """Test configuration reset functionality."""
    manager = ConfigManager(temp_config_dir / "config.json")

    config = manager.load()
    config.oracle_max_jobs = 4
    manager.save()

    assert manager.reset().oracle_max_jobs == 6


def test_config_path_resolution(temp_config_dir):
    """Test that a relative log directory lands under the data directory."""
    config = ConfigManager(temp_config_dir / "config.json").load()

    assert config.logs_dir.is_absolute()
    assert config.logs_dir == DATA_DIR / "logs"


def test_config_absolute_logs_dir(temp_config_dir):
    """Test that an absolute log directory is kept."""
    config_path = temp_config_dir / "config.json"
    logs = temp_config_dir / "my-logs"
    save_config(SolverConfig(logs_dir=logs), config_path)

    assert load_config(config_path).logs_dir == logs


def test_config_ensure_directories(temp_config_dir):
    """Test that the log directory is created only when file logging is on."""
    logs = temp_config_dir / "logs"
    SolverConfig(logs_dir=logs).ensure_directories()
    assert not logs.exists()

    SolverConfig(logs_dir=logs, log_to_file=True).ensure_directories()
    assert logs.is_dir()


def test_config_model_validation():
    """Test SolverConfig model validation."""
    config = SolverConfig(enumeration_budget=10, max_workers=3)
    assert config.enumeration_budget == 10
    assert config.max_workers == 3

    with pytest.raises(ValidationError):
        SolverConfig(graver_budget=0)


def test_config_worker_clamp():
    """Test that worker counts are clamped to 1..8."""
    assert SolverConfig(max_workers=0).max_workers == 1
    assert SolverConfig(max_workers=64).max_workers == 8


def test_config_validate_assignment():
    """Test that assignments are validated too."""
    config = SolverConfig()
    with pytest.raises(ValidationError):
        config.oracle_volume_limit = -1


def test_config_forbidden_extra_fields():
    """Test that extra fields are forbidden in config."""
    with pytest.raises(ValidationError):
        SolverConfig(unknown_field="value")


def test_config_serialization():
    """Test configuration serialization/deserialization."""
    config = SolverConfig(enumeration_budget=42, log_to_file=True)

    config_dict = config.model_dump()
    assert config_dict["enumeration_budget"] == 42
    assert config_dict["log_to_file"] is True

    assert SolverConfig(**config_dict) == config


@patch("pathlib.Path.write_text")
def test_config_save_permission_error(mock_write, temp_config_dir):
    """Test handling of permission errors during save."""
    mock_write.side_effect = PermissionError("Access denied")

    manager = ConfigManager(temp_config_dir / "config.json")
    manager.load()

    # Should not raise exception, just log error
    manager.save()
