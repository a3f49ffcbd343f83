"""
Simple tests for the lab configuration and logging setup
"""

import json
import logging
import tempfile
from pathlib import Path

import pytest
import yaml

from laskerlab.utils.config import DEFAULT_CONFIG, load_lab_config
from laskerlab.utils.errors import ValidationError
from laskerlab.utils.logging_config import JSONFormatter, setup_container_logging, setup_logging

PROJECT_ROOT = Path(__file__).parent.parent


def test_lab_config_yaml_matches_defaults():
    """The shipped lab.config.yaml spells out the built-in defaults."""
    config_path = PROJECT_ROOT / "lab.config.yaml"
    assert config_path.exists(), "lab.config.yaml file should exist"

    with open(config_path, 'r') as f:
        config = yaml.safe_load(f)

    assert config == DEFAULT_CONFIG


def test_partial_config_is_merged(monkeypatch):
    """Keys missing from a config file keep their defaults."""
    monkeypatch.delenv("LASKERLAB_SIZE_CAP", raising=False)
    with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as temp_file:
        yaml.dump({"corpus": {"size_cap": 16}}, temp_file)
        temp_file_path = temp_file.name

    try:
        config = load_lab_config(Path(temp_file_path))
        assert config["corpus"]["size_cap"] == 16
        assert config["corpus"]["max_modulus"] == 60
        assert config["rings"]["size_cap"] == 4096
    finally:
        Path(temp_file_path).unlink()


def test_broken_config_falls_back(monkeypatch):
    monkeypatch.delenv("LASKERLAB_SIZE_CAP", raising=False)
    with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as temp_file:
        temp_file.write("rings: [unclosed")
        temp_file_path = temp_file.name

    try:
        assert load_lab_config(Path(temp_file_path)) == DEFAULT_CONFIG
    finally:
        Path(temp_file_path).unlink()


def test_size_cap_from_environment(monkeypatch):
    monkeypatch.setenv("LASKERLAB_SIZE_CAP", "128")
    assert load_lab_config(PROJECT_ROOT / "lab.config.yaml")["rings"]["size_cap"] == 128

    monkeypatch.setenv("LASKERLAB_SIZE_CAP", "lots")
    with pytest.raises(ValidationError):
        load_lab_config(PROJECT_ROOT / "lab.config.yaml")


def test_json_log_format():
    """Structured records carry the extra fields."""
    record = logging.LogRecord("laskerlab.test", logging.INFO, __file__, 1, "suite %s", ("intersection",), None)
    record.suite = "intersection"
    entry = json.loads(JSONFormatter().format(record))
    assert entry["message"] == "suite intersection"
    assert entry["level"] == "INFO"
    assert entry["suite"] == "intersection"
    assert entry["app"] == "laskerlab"


def test_setup_logging_level():
    setup_logging(level="DEBUG")
    assert logging.getLogger("laskerlab").level == logging.DEBUG
    setup_logging(level="WARNING")
    assert logging.getLogger().level == logging.WARNING


def test_environment_overrides_logging(monkeypatch):
    monkeypatch.setenv("LASKERLAB_LOG_LEVEL", "INFO")
    monkeypatch.setenv("LASKERLAB_LOG_FORMAT", "json")
    monkeypatch.setenv("LASKERLAB_APP_NAME", "lab-ci")
    setup_container_logging(level="WARNING", format_type="simple")
    assert logging.getLogger("laskerlab").level == logging.INFO
    formatter = logging.getLogger().handlers[0].formatter
    assert isinstance(formatter, JSONFormatter)
    assert formatter.app_name == "lab-ci"

    setup_container_logging(verbose=True)
    assert logging.getLogger("laskerlab").level == logging.DEBUG


def test_logging_defaults_without_environment(monkeypatch):
    for name in ("LASKERLAB_LOG_LEVEL", "LASKERLAB_LOG_FORMAT", "LASKERLAB_APP_NAME"):
        monkeypatch.delenv(name, raising=False)
    setup_container_logging(level="ERROR")
    assert logging.getLogger("laskerlab").level == logging.ERROR
    assert not isinstance(logging.getLogger().handlers[0].formatter, JSONFormatter)
